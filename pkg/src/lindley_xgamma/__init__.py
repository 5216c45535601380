"""Discriminate between Lindley and xgamma lifetime models by the ratio of
maximized likelihoods, with asymptotic and simulated probabilities of
correct selection and minimum sample sizes."""

__version__ = "0.1.0"

from .asymptotics import AsymptoticSummary, asymptotic_summary, pcs_asymptotic, pseudo_true_lambda, pseudo_true_theta
from .discrimination import DiscriminationResult, Selection, discriminate
from .distributions import Family, Model, Sample, cdf, density, lindley, log_density, moments, sample, xgamma
from .errors import BracketError, DomainError, InputError, NumericalError
from .estimation import FitResult, fit_lindley, fit_xgamma, log_likelihood
from .gof import GofReport, chi_square_test, gof_report, ks_test
from .montecarlo import PcsEstimate, pcs_table, simulate_pcs
from .sample_size import SampleSizePlan, ks_distance, min_n, plan_min_sample_size

__all__ = [
    "AsymptoticSummary", "asymptotic_summary", "pcs_asymptotic", "pseudo_true_lambda", "pseudo_true_theta",
    "DiscriminationResult", "Selection", "discriminate",
    "Family", "Model", "Sample", "cdf", "density", "lindley", "log_density", "moments", "sample", "xgamma",
    "BracketError", "DomainError", "InputError", "NumericalError",
    "FitResult", "fit_lindley", "fit_xgamma", "log_likelihood",
    "GofReport", "chi_square_test", "gof_report", "ks_test",
    "PcsEstimate", "pcs_table", "simulate_pcs",
    "SampleSizePlan", "ks_distance", "min_n", "plan_min_sample_size",
]
