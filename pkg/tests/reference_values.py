"""Published reference values used by the golden and acceptance tests."""

# lambda: (AM_LD, AV_LD, theta_tilde)
TABLE1 = {
    0.45: (0.00794, 0.01582, 0.59983),
    0.55: (0.00738, 0.01450, 0.72360),
    0.65: (0.00699, 0.01363, 0.84547),
    0.70: (0.00684, 0.01330, 0.90578),
    0.75: (0.00670, 0.01301, 0.96574),
    0.78: (0.00663, 0.01286, 1.00154),
    0.89: (0.00639, 0.01237, 1.13186),
    0.90: (0.00637, 0.01233, 1.14363),
    1.15: (0.00593, 0.01150, 1.43473),
    1.16: (0.00591, 0.01147, 1.44626),
    1.37: (0.00561, 0.01090, 1.68648),
    1.38: (0.00559, 0.01087, 1.69784),
}

# theta: (AM_XG, AV_XG, lambda_tilde)
TABLE2 = {
    0.85: (-0.00718, 0.01480, 0.65520),
    0.90: (-0.00706, 0.01456, 0.69686),
    1.05: (-0.00674, 0.01392, 0.82302),
    1.10: (-0.00665, 0.01372, 0.86544),
    1.25: (-0.00639, 0.01317, 0.99369),
    1.26: (-0.00637, 0.01314, 1.00229),
    1.40: (-0.00616, 0.01267, 1.12328),
    1.50: (-0.00601, 0.01236, 1.21035),
    1.65: (-0.00580, 0.01191, 1.34185),
    1.80: (-0.00561, 0.01149, 1.47435),
    2.00: (-0.00536, 0.01096, 1.65242),
    2.05: (-0.00530, 0.01084, 1.69716),
}

# lambda: (n, K-S distance)
TABLE3 = {
    0.45: (15, 0.02158), 0.55: (33, 0.02520), 0.65: (96, 0.02776), 0.70: (196, 0.02867),
    0.75: (400, 0.02943), 0.78: (481, 0.02983), 0.89: (143, 0.03098), 0.90: (127, 0.03106),
    1.15: (21, 0.03196), 1.16: (20, 0.03193), 1.37: (10, 0.03118), 1.38: (9, 0.03086),
}

# theta: (n, K-S distance)
TABLE4 = {
    0.85: (23, 0.02674), 0.90: (30, 0.02771), 1.05: (87, 0.02964), 1.10: (137, 0.03007),
    1.25: (525, 0.03099), 1.26: (532, 0.03104), 1.40: (191, 0.03155), 1.50: (89, 0.03175),
    1.65: (41, 0.03183), 1.80: (24, 0.03164), 2.00: (14, 0.03102), 2.05: (13, 0.03087),
}

NS = (20, 40, 60, 80, 100, 400)

# lambda: (Monte Carlo PCS row, asymptotic PCS row) over NS
TABLE5 = {
    0.45: ((0.62020, 0.65264, 0.68804, 0.71888, 0.73360, 0.89796),
           (0.61118, 0.65519, 0.68763, 0.71389, 0.73613, 0.89669)),
    0.55: ((0.61276, 0.65620, 0.68752, 0.71496, 0.72740, 0.89004),
           (0.60797, 0.65083, 0.68248, 0.70818, 0.72999, 0.88982)),
    0.65: ((0.61848, 0.65288, 0.67788, 0.71256, 0.73324, 0.88344),
           (0.60560, 0.64759, 0.67866, 0.70392, 0.72540, 0.88452)),
    0.70: ((0.61528, 0.65452, 0.68052, 0.70812, 0.72808, 0.88052),
           (0.60459, 0.64621, 0.67703, 0.70211, 0.72344, 0.88223)),
    0.75: ((0.61896, 0.65672, 0.67788, 0.70492, 0.72392, 0.88052),
           (0.60366, 0.64494, 0.67553, 0.70044, 0.72164, 0.88009)),
    0.78: ((0.61876, 0.65524, 0.67648, 0.70312, 0.72180, 0.87340),
           (0.60313, 0.64422, 0.67468, 0.69949, 0.72061, 0.87886)),
    0.89: ((0.61180, 0.65256, 0.67372, 0.70356, 0.72016, 0.87680),
           (0.60135, 0.64178, 0.67179, 0.69626, 0.71712, 0.87464)),
    0.90: ((0.61120, 0.65236, 0.67688, 0.70064, 0.72020, 0.87176),
           (0.60120, 0.64157, 0.67154, 0.69598, 0.71682, 0.87428)),
    1.15: ((0.61580, 0.64408, 0.67444, 0.69276, 0.70944, 0.86296),
           (0.59767, 0.63674, 0.66581, 0.68958, 0.70988, 0.86565)),
    1.16: ((0.61856, 0.64412, 0.67528, 0.69528, 0.71308, 0.86432),
           (0.59754, 0.63656, 0.66560, 0.68934, 0.70962, 0.86532)),
    1.37: ((0.60564, 0.63624, 0.67340, 0.68640, 0.70624, 0.86104),
           (0.59489, 0.63293, 0.66128, 0.68449, 0.70436, 0.85859)),
    1.38: ((0.60676, 0.64320, 0.66784, 0.68536, 0.70592, 0.85880),
           (0.59477, 0.63276, 0.66108, 0.68427, 0.70412, 0.85827)),
}

# theta: (Monte Carlo PCS row, asymptotic PCS row) over NS
TABLE6 = {
    0.85: ((0.59160, 0.63696, 0.67272, 0.69856, 0.71836, 0.88056),
           (0.60410, 0.64554, 0.67624, 0.70122, 0.72249, 0.88110)),
    0.90: ((0.59040, 0.63612, 0.67144, 0.69668, 0.71684, 0.87856),
           (0.60319, 0.64430, 0.67478, 0.69960, 0.72073, 0.87900)),
    1.05: ((0.58832, 0.62940, 0.66692, 0.69312, 0.71184, 0.87252),
           (0.60088, 0.64114, 0.67102, 0.69541, 0.71620, 0.87351)),
    1.10: ((0.58948, 0.62980, 0.66380, 0.68408, 0.71192, 0.86996),
           (0.60020, 0.64021, 0.66992, 0.69417, 0.71486, 0.87187)),
    1.25: ((0.58692, 0.62796, 0.66324, 0.68860, 0.70764, 0.86732),
           (0.59833, 0.63764, 0.66688, 0.69077, 0.71117, 0.86728)),
    1.26: ((0.58712, 0.62960, 0.66472, 0.68848, 0.70440, 0.86760),
           (0.59821, 0.63748, 0.66669, 0.69055, 0.71094, 0.86699)),
    1.40: ((0.58448, 0.62688, 0.65984, 0.68536, 0.70176, 0.86180),
           (0.59662, 0.63531, 0.66410, 0.68766, 0.70780, 0.86301)),
    1.50: ((0.58004, 0.62440, 0.65500, 0.68928, 0.70168, 0.86024),
           (0.59555, 0.63383, 0.66235, 0.68569, 0.70567, 0.86027)),
    1.65: ((0.58220, 0.62712, 0.65240, 0.67924, 0.70000, 0.85336),
           (0.59400, 0.63170, 0.65982, 0.68285, 0.70258, 0.85626)),
    1.80: ((0.58444, 0.62228, 0.65968, 0.67316, 0.69392, 0.84964),
           (0.59251, 0.62965, 0.65737, 0.68011, 0.69960, 0.85233)),
    2.00: ((0.58360, 0.62036, 0.64884, 0.67656, 0.69080, 0.84968),
           (0.59059, 0.62700, 0.65422, 0.67656, 0.69574, 0.84717)),
    2.05: ((0.57592, 0.62340, 0.64804, 0.67084, 0.68944, 0.84388),
           (0.59012, 0.62636, 0.65345, 0.67569, 0.69479, 0.84589)),
}

# Real-data illustrations
BALL_BEARINGS = {
    "lambda_hat": 0.0273, "lindley_loglik": -115.7356,
    "theta_hat": 0.04071, "xgamma_loglik": -113.9634,
    "T": -1.7722,
    "ks_lindley": (0.19283, 0.31739), "ks_xgamma": (0.13228, 0.76796),
    "chi_lindley": (3.0419, 0.3852), "chi_xgamma": (1.4667, 0.689),
    "edges": (35.0, 55.0, 80.0, 100.0),
    "observed": (3, 7, 5, 3, 5),
    "expected_lindley": (5.93, 4.46, 4.52, 2.61, 5.48),
    "expected_xgamma": (4.50, 4.88, 5.45, 3.12, 5.05),
}
BANK = {
    "lambda_hat": 0.1866, "lindley_loglik": -319.0374,
    "theta_hat": 0.2634, "xgamma_loglik": -321.0203,
    "T": 1.9829,
    "ks_lindley": (0.06768, 0.74946), "ks_xgamma": (0.06249, 0.82970),
    "chi_lindley": (0.1833, 0.9802), "chi_xgamma": (1.3041, 0.7281),
    "edges": (5.0, 10.0, 15.0, 20.0),
    "observed": (31, 31, 19, 10, 9),
    "expected_lindley": (29.73, 30.46, 19.36, 10.52, 9.93),
    "expected_xgamma": (26.88, 31.26, 22.03, 11.51, 8.32),
}
