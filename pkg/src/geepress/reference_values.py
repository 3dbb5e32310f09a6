"""Selection proportions and coefficient MSEs from the published simulation study.

Keys are table ids ("1"-"9" for selection proportions, "B1"-"B8" for MSE),
then ``(true_structure, N)``, then a criterion (or ``beta0``..``beta2``).
Each tuple lists working structures in the order Indep, AR1, Exch[, UN].
"""

SELECTION = {
    "1": {
        ("ar1", 50): {
            "CIC": (0.028, 0.089, 0.028, 0.859),
            "DBAR": (0.03, 0.181, 0.366, 0.474),
            "GPC": (0.04, 0.364, 0.397, 0.199),
            "QIC": (0.115, 0.238, 0.108, 0.547),
            "RJ1": (0.087, 0.24, 0.393, 0.309),
            "RJ2": (0.05, 0.27, 0.391, 0.295),
            "SC": (0.259, 0.327, 0.213, 0.203),
        },
        ("ar1", 100): {
            "CIC": (0.017, 0.062, 0.025, 0.9),
            "DBAR": (0.006, 0.165, 0.421, 0.5),
            "GPC": (0.031, 0.324, 0.417, 0.228),
            "QIC": (0.105, 0.225, 0.105, 0.57),
            "RJ1": (0.051, 0.269, 0.343, 0.361),
            "RJ2": (0.027, 0.277, 0.343, 0.363),
            "SC": (0.268, 0.298, 0.209, 0.227),
        },
        ("exch", 50): {
            "CIC": (0.018, 0.038, 0.076, 0.868),
            "DBAR": (0.002, 0.026, 0.541, 0.452),
            "GPC": (0.028, 0.218, 0.582, 0.172),
            "QIC": (0.156, 0.109, 0.218, 0.519),
            "RJ1": (0.014, 0.099, 0.535, 0.36),
            "RJ2": (0.007, 0.048, 0.585, 0.372),
            "SC": (0.305, 0.335, 0.209, 0.152),
        },
        ("exch", 100): {
            "CIC": (0.013, 0.026, 0.043, 0.924),
            "DBAR": (0.0, 0.002, 0.555, 0.496),
            "GPC": (0.038, 0.314, 0.489, 0.159),
            "QIC": (0.126, 0.076, 0.212, 0.588),
            "RJ1": (0.0, 0.028, 0.544, 0.45),
            "RJ2": (0.0, 0.01, 0.566, 0.432),
            "SC": (0.25, 0.386, 0.228, 0.136),
        },
        ("un", 50): {
            "CIC": (0.029, 0.077, 0.042, 0.856),
            "DBAR": (0.008, 0.12, 0.443, 0.471),
            "GPC": (0.034, 0.342, 0.447, 0.178),
            "QIC": (0.152, 0.188, 0.138, 0.526),
            "RJ1": (0.049, 0.258, 0.398, 0.308),
            "RJ2": (0.025, 0.222, 0.467, 0.296),
            "SC": (0.289, 0.348, 0.192, 0.172),
        },
        ("un", 100): {
            "CIC": (0.017, 0.05, 0.017, 0.918),
            "DBAR": (0.003, 0.089, 0.492, 0.481),
            "GPC": (0.046, 0.327, 0.411, 0.216),
            "QIC": (0.121, 0.204, 0.125, 0.556),
            "RJ1": (0.011, 0.231, 0.411, 0.375),
            "RJ2": (0.007, 0.171, 0.454, 0.376),
            "SC": (0.274, 0.32, 0.195, 0.212),
        },
    },
    "2": {
        ("ar1", 50): {
            "CIC": (0.009, 0.209, 0.027, 0.757),
            "DBAR": (0.002, 0.234, 0.471, 0.317),
            "GPC": (0.03, 0.421, 0.448, 0.102),
            "QIC": (0.105, 0.33, 0.111, 0.457),
            "RJ1": (0.009, 0.299, 0.452, 0.25),
            "RJ2": (0.001, 0.292, 0.469, 0.245),
            "SC": (0.318, 0.387, 0.195, 0.1),
        },
        ("ar1", 100): {
            "CIC": (0.002, 0.134, 0.007, 0.861),
            "DBAR": (0.0, 0.205, 0.468, 0.375),
            "GPC": (0.039, 0.412, 0.446, 0.104),
            "QIC": (0.068, 0.32, 0.119, 0.495),
            "RJ1": (0.0, 0.274, 0.414, 0.332),
            "RJ2": (0.0, 0.278, 0.437, 0.295),
            "SC": (0.284, 0.389, 0.223, 0.104),
        },
        ("exch", 50): {
            "CIC": (0.021, 0.053, 0.18, 0.75),
            "DBAR": (0.0, 0.011, 0.663, 0.338),
            "GPC": (0.041, 0.309, 0.558, 0.092),
            "QIC": (0.15, 0.086, 0.331, 0.438),
            "RJ1": (0.0, 0.058, 0.623, 0.32),
            "RJ2": (0.0, 0.013, 0.703, 0.285),
            "SC": (0.356, 0.343, 0.219, 0.082),
        },
        ("exch", 100): {
            "CIC": (0.003, 0.019, 0.105, 0.874),
            "DBAR": (0.0, 0.0, 0.651, 0.386),
            "GPC": (0.057, 0.366, 0.515, 0.062),
            "QIC": (0.158, 0.044, 0.327, 0.475),
            "RJ1": (0.0, 0.011, 0.601, 0.405),
            "RJ2": (0.0, 0.001, 0.64, 0.361),
            "SC": (0.361, 0.361, 0.228, 0.05),
        },
        ("un", 50): {
            "CIC": (0.016, 0.14, 0.071, 0.776),
            "DBAR": (0.0, 0.094, 0.583, 0.342),
            "GPC": (0.025, 0.385, 0.5, 0.09),
            "QIC": (0.13, 0.232, 0.181, 0.46),
            "RJ1": (0.001, 0.215, 0.513, 0.279),
            "RJ2": (0.0, 0.144, 0.599, 0.259),
            "SC": (0.322, 0.379, 0.217, 0.082),
        },
        ("un", 100): {
            "CIC": (0.002, 0.101, 0.038, 0.861),
            "DBAR": (0.0, 0.049, 0.597, 0.387),
            "GPC": (0.055, 0.374, 0.501, 0.07),
            "QIC": (0.094, 0.21, 0.203, 0.493),
            "RJ1": (0.0, 0.145, 0.526, 0.344),
            "RJ2": (0.0, 0.099, 0.585, 0.326),
            "SC": (0.334, 0.368, 0.238, 0.06),
        },
    },
    "3": {
        ("ar1", 50): {
            "CIC": (0.04, 0.095, 0.043, 0.827),
            "DBAR": (0.032, 0.181, 0.398, 0.434),
            "GPC": (0.087, 0.355, 0.346, 0.214),
            "QIC": (0.127, 0.249, 0.104, 0.524),
            "RJ1": (0.099, 0.243, 0.398, 0.278),
            "RJ2": (0.06, 0.288, 0.413, 0.247),
            "SC": (0.237, 0.287, 0.25, 0.226),
        },
        ("ar1", 100): {
            "CIC": (0.012, 0.069, 0.017, 0.904),
            "DBAR": (0.007, 0.169, 0.44, 0.477),
            "GPC": (0.123, 0.317, 0.365, 0.195),
            "QIC": (0.101, 0.218, 0.109, 0.575),
            "RJ1": (0.048, 0.248, 0.386, 0.336),
            "RJ2": (0.033, 0.248, 0.416, 0.314),
            "SC": (0.269, 0.264, 0.271, 0.196),
        },
        ("exch", 50): {
            "CIC": (0.039, 0.047, 0.117, 0.798),
            "DBAR": (0.005, 0.032, 0.558, 0.429),
            "GPC": (0.092, 0.261, 0.493, 0.155),
            "QIC": (0.167, 0.118, 0.238, 0.481),
            "RJ1": (0.015, 0.134, 0.544, 0.316),
            "RJ2": (0.011, 0.073, 0.587, 0.331),
            "SC": (0.297, 0.258, 0.296, 0.149),
        },
        ("exch", 100): {
            "CIC": (0.011, 0.023, 0.066, 0.902),
            "DBAR": (0.0, 0.005, 0.538, 0.493),
            "GPC": (0.145, 0.306, 0.416, 0.134),
            "QIC": (0.114, 0.113, 0.231, 0.549),
            "RJ1": (0.001, 0.056, 0.526, 0.448),
            "RJ2": (0.0, 0.014, 0.581, 0.414),
            "SC": (0.317, 0.281, 0.287, 0.115),
        },
        ("un", 50): {
            "CIC": (0.043, 0.094, 0.039, 0.828),
            "DBAR": (0.012, 0.148, 0.441, 0.438),
            "GPC": (0.095, 0.306, 0.403, 0.196),
            "QIC": (0.164, 0.198, 0.133, 0.507),
            "RJ1": (0.066, 0.233, 0.414, 0.3),
            "RJ2": (0.032, 0.206, 0.471, 0.297),
            "SC": (0.283, 0.273, 0.252, 0.192),
        },
        ("un", 100): {
            "CIC": (0.018, 0.035, 0.026, 0.923),
            "DBAR": (0.001, 0.098, 0.487, 0.483),
            "GPC": (0.128, 0.32, 0.366, 0.186),
            "QIC": (0.129, 0.161, 0.123, 0.591),
            "RJ1": (0.02, 0.228, 0.418, 0.363),
            "RJ2": (0.008, 0.189, 0.465, 0.353),
            "SC": (0.28, 0.284, 0.258, 0.179),
        },
    },
    "4": {
        ("ar1", 50): {
            "CIC": (0.015, 0.235, 0.047, 0.708),
            "DBAR": (0.001, 0.262, 0.432, 0.332),
            "GPC": (0.092, 0.407, 0.395, 0.106),
            "QIC": (0.151, 0.345, 0.101, 0.406),
            "RJ1": (0.013, 0.27, 0.482, 0.245),
            "RJ2": (0.007, 0.285, 0.482, 0.23),
            "SC": (0.269, 0.342, 0.279, 0.11),
        },
        ("ar1", 100): {
            "CIC": (0.002, 0.152, 0.017, 0.831),
            "DBAR": (0.0, 0.247, 0.48, 0.324),
            "GPC": (0.151, 0.363, 0.407, 0.079),
            "QIC": (0.109, 0.325, 0.109, 0.46),
            "RJ1": (0.0, 0.291, 0.444, 0.284),
            "RJ2": (0.0, 0.309, 0.436, 0.26),
            "SC": (0.282, 0.33, 0.313, 0.075),
        },
        ("exch", 50): {
            "CIC": (0.024, 0.059, 0.183, 0.736),
            "DBAR": (0.0, 0.024, 0.674, 0.309),
            "GPC": (0.109, 0.264, 0.546, 0.081),
            "QIC": (0.176, 0.127, 0.293, 0.404),
            "RJ1": (0.0, 0.093, 0.646, 0.27),
            "RJ2": (0.0, 0.027, 0.719, 0.259),
            "SC": (0.287, 0.28, 0.364, 0.07),
        },
        ("exch", 100): {
            "CIC": (0.007, 0.023, 0.185, 0.788),
            "DBAR": (0.0, 0.002, 0.663, 0.37),
            "GPC": (0.166, 0.311, 0.467, 0.056),
            "QIC": (0.153, 0.08, 0.368, 0.4),
            "RJ1": (0.0, 0.013, 0.634, 0.365),
            "RJ2": (0.0, 0.002, 0.67, 0.332),
            "SC": (0.34, 0.264, 0.344, 0.052),
        },
        ("un", 50): {
            "CIC": (0.02, 0.16, 0.081, 0.741),
            "DBAR": (0.0, 0.13, 0.556, 0.331),
            "GPC": (0.104, 0.342, 0.458, 0.096),
            "QIC": (0.155, 0.244, 0.165, 0.438),
            "RJ1": (0.004, 0.245, 0.507, 0.258),
            "RJ2": (0.0, 0.174, 0.589, 0.244),
            "SC": (0.298, 0.31, 0.31, 0.082),
        },
        ("un", 100): {
            "CIC": (0.007, 0.105, 0.057, 0.836),
            "DBAR": (0.0, 0.087, 0.563, 0.386),
            "GPC": (0.162, 0.333, 0.42, 0.086),
            "QIC": (0.122, 0.225, 0.193, 0.462),
            "RJ1": (0.0, 0.171, 0.524, 0.324),
            "RJ2": (0.0, 0.103, 0.586, 0.319),
            "SC": (0.33, 0.292, 0.304, 0.074),
        },
    },
    "5": {
        ("ar1", 50): {
            "CIC": (0.02, 0.086, 0.034, 0.863),
            "DBAR": (0.072, 0.213, 0.392, 0.369),
            "GPC": (0.042, 0.358, 0.422, 0.179),
            "QIC": (0.137, 0.222, 0.085, 0.558),
            "RJ1": (0.226, 0.263, 0.32, 0.201),
            "RJ2": (0.159, 0.306, 0.337, 0.204),
            "SC": (0.348, 0.281, 0.187, 0.186),
        },
        ("ar1", 100): {
            "CIC": (0.018, 0.073, 0.016, 0.895),
            "DBAR": (0.034, 0.21, 0.424, 0.399),
            "GPC": (0.061, 0.354, 0.402, 0.183),
            "QIC": (0.118, 0.193, 0.08, 0.616),
            "RJ1": (0.119, 0.311, 0.331, 0.251),
            "RJ2": (0.085, 0.309, 0.357, 0.261),
            "SC": (0.386, 0.276, 0.153, 0.185),
        },
        ("exch", 50): {
            "CIC": (0.022, 0.05, 0.059, 0.871),
            "DBAR": (0.006, 0.065, 0.55, 0.409),
            "GPC": (0.087, 0.136, 0.61, 0.167),
            "QIC": (0.138, 0.1, 0.158, 0.607),
            "RJ1": (0.048, 0.217, 0.481, 0.265),
            "RJ2": (0.025, 0.153, 0.556, 0.268),
            "SC": (0.347, 0.209, 0.29, 0.155),
        },
        ("exch", 100): {
            "CIC": (0.008, 0.018, 0.036, 0.941),
            "DBAR": (0.0, 0.014, 0.561, 0.487),
            "GPC": (0.155, 0.143, 0.543, 0.159),
            "QIC": (0.117, 0.076, 0.151, 0.659),
            "RJ1": (0.003, 0.124, 0.537, 0.361),
            "RJ2": (0.002, 0.07, 0.556, 0.384),
            "SC": (0.4, 0.176, 0.289, 0.136),
        },
        ("un", 50): {
            "CIC": (0.033, 0.073, 0.039, 0.856),
            "DBAR": (0.028, 0.18, 0.435, 0.394),
            "GPC": (0.044, 0.247, 0.524, 0.185),
            "QIC": (0.14, 0.176, 0.127, 0.558),
            "RJ1": (0.122, 0.267, 0.376, 0.246),
            "RJ2": (0.088, 0.241, 0.425, 0.252),
            "SC": (0.367, 0.268, 0.199, 0.167),
        },
        ("un", 100): {
            "CIC": (0.017, 0.056, 0.041, 0.887),
            "DBAR": (0.012, 0.147, 0.449, 0.46),
            "GPC": (0.108, 0.235, 0.437, 0.22),
            "QIC": (0.113, 0.158, 0.134, 0.599),
            "RJ1": (0.06, 0.319, 0.366, 0.28),
            "RJ2": (0.039, 0.277, 0.39, 0.303),
            "SC": (0.378, 0.253, 0.169, 0.2),
        },
    },
    "6": {
        ("ar1", 50): {
            "CIC": (0.01, 0.194, 0.026, 0.773),
            "DBAR": (0.008, 0.241, 0.481, 0.288),
            "GPC": (0.106, 0.452, 0.364, 0.078),
            "QIC": (0.098, 0.288, 0.133, 0.481),
            "RJ1": (0.059, 0.313, 0.433, 0.205),
            "RJ2": (0.034, 0.31, 0.447, 0.214),
            "SC": (0.336, 0.424, 0.161, 0.079),
        },
        ("ar1", 100): {
            "CIC": (0.003, 0.105, 0.017, 0.878),
            "DBAR": (0.0, 0.22, 0.499, 0.346),
            "GPC": (0.188, 0.428, 0.315, 0.069),
            "QIC": (0.073, 0.297, 0.097, 0.534),
            "RJ1": (0.006, 0.337, 0.441, 0.229),
            "RJ2": (0.003, 0.347, 0.447, 0.212),
            "SC": (0.379, 0.413, 0.148, 0.06),
        },
        ("exch", 50): {
            "CIC": (0.011, 0.063, 0.074, 0.853),
            "DBAR": (0.0, 0.049, 0.617, 0.344),
            "GPC": (0.175, 0.14, 0.623, 0.063),
            "QIC": (0.152, 0.075, 0.211, 0.567),
            "RJ1": (0.004, 0.201, 0.589, 0.214),
            "RJ2": (0.0, 0.125, 0.669, 0.211),
            "SC": (0.335, 0.177, 0.429, 0.059),
        },
        ("exch", 100): {
            "CIC": (0.004, 0.02, 0.041, 0.937),
            "DBAR": (0.0, 0.011, 0.598, 0.443),
            "GPC": (0.271, 0.155, 0.527, 0.047),
            "QIC": (0.122, 0.054, 0.194, 0.631),
            "RJ1": (0.0, 0.082, 0.625, 0.319),
            "RJ2": (0.0, 0.036, 0.68, 0.288),
            "SC": (0.386, 0.169, 0.401, 0.044),
        },
        ("un", 50): {
            "CIC": (0.009, 0.107, 0.057, 0.83),
            "DBAR": (0.002, 0.169, 0.504, 0.347),
            "GPC": (0.141, 0.3, 0.46, 0.1),
            "QIC": (0.116, 0.16, 0.164, 0.562),
            "RJ1": (0.023, 0.378, 0.423, 0.182),
            "RJ2": (0.009, 0.3, 0.5, 0.197),
            "SC": (0.355, 0.357, 0.215, 0.074),
        },
        ("un", 100): {
            "CIC": (0.002, 0.047, 0.022, 0.929),
            "DBAR": (0.0, 0.079, 0.57, 0.394),
            "GPC": (0.242, 0.322, 0.365, 0.071),
            "QIC": (0.113, 0.151, 0.147, 0.59),
            "RJ1": (0.002, 0.255, 0.47, 0.291),
            "RJ2": (0.0, 0.189, 0.529, 0.286),
            "SC": (0.387, 0.342, 0.211, 0.06),
        },
    },
    "7": {
        ("ar1", 50): {
            "CIC": (0.041, 0.109, 0.031, 0.823),
            "DBAR": (0.065, 0.235, 0.388, 0.366),
            "GPC": (0.041, 0.393, 0.41, 0.156),
            "QIC": (0.135, 0.197, 0.118, 0.553),
            "RJ1": (0.203, 0.269, 0.318, 0.226),
            "RJ2": (0.136, 0.303, 0.322, 0.241),
            "SC": (0.306, 0.311, 0.229, 0.154),
        },
        ("ar1", 100): {
            "CIC": (0.019, 0.075, 0.022, 0.888),
            "DBAR": (0.033, 0.228, 0.418, 0.402),
            "GPC": (0.089, 0.362, 0.388, 0.162),
            "QIC": (0.117, 0.196, 0.089, 0.604),
            "RJ1": (0.134, 0.299, 0.343, 0.238),
            "RJ2": (0.092, 0.308, 0.353, 0.256),
            "SC": (0.314, 0.301, 0.221, 0.164),
        },
        ("exch", 50): {
            "CIC": (0.031, 0.064, 0.067, 0.841),
            "DBAR": (0.01, 0.077, 0.532, 0.407),
            "GPC": (0.07, 0.138, 0.641, 0.152),
            "QIC": (0.157, 0.112, 0.173, 0.561),
            "RJ1": (0.066, 0.274, 0.432, 0.241),
            "RJ2": (0.032, 0.191, 0.519, 0.264),
            "SC": (0.331, 0.183, 0.347, 0.14),
        },
        ("exch", 100): {
            "CIC": (0.015, 0.026, 0.046, 0.916),
            "DBAR": (0.0, 0.039, 0.553, 0.47),
            "GPC": (0.142, 0.172, 0.547, 0.139),
            "QIC": (0.13, 0.068, 0.161, 0.648),
            "RJ1": (0.013, 0.175, 0.493, 0.342),
            "RJ2": (0.006, 0.12, 0.539, 0.346),
            "SC": (0.366, 0.19, 0.32, 0.124),
        },
        ("un", 50): {
            "CIC": (0.034, 0.089, 0.065, 0.813),
            "DBAR": (0.041, 0.193, 0.468, 0.351),
            "GPC": (0.051, 0.314, 0.485, 0.15),
            "QIC": (0.155, 0.157, 0.152, 0.539),
            "RJ1": (0.152, 0.277, 0.367, 0.213),
            "RJ2": (0.087, 0.284, 0.406, 0.233),
            "SC": (0.323, 0.297, 0.24, 0.142),
        },
        ("un", 100): {
            "CIC": (0.017, 0.063, 0.036, 0.885),
            "DBAR": (0.017, 0.153, 0.443, 0.451),
            "GPC": (0.09, 0.279, 0.45, 0.181),
            "QIC": (0.118, 0.162, 0.112, 0.611),
            "RJ1": (0.075, 0.329, 0.364, 0.256),
            "RJ2": (0.048, 0.293, 0.384, 0.286),
            "SC": (0.332, 0.269, 0.243, 0.157),
        },
    },
    "8": {
        ("ar1", 50): {
            "CIC": (0.015, 0.206, 0.05, 0.735),
            "DBAR": (0.013, 0.291, 0.466, 0.257),
            "GPC": (0.1, 0.452, 0.378, 0.071),
            "QIC": (0.141, 0.28, 0.134, 0.448),
            "RJ1": (0.069, 0.326, 0.428, 0.19),
            "RJ2": (0.034, 0.375, 0.424, 0.174),
            "SC": (0.295, 0.433, 0.205, 0.068),
        },
        ("ar1", 100): {
            "CIC": (0.002, 0.149, 0.013, 0.841),
            "DBAR": (0.001, 0.262, 0.484, 0.311),
            "GPC": (0.195, 0.422, 0.326, 0.057),
            "QIC": (0.08, 0.3, 0.122, 0.501),
            "RJ1": (0.014, 0.345, 0.428, 0.232),
            "RJ2": (0.005, 0.345, 0.44, 0.219),
            "SC": (0.356, 0.391, 0.197, 0.056),
        },
        ("exch", 50): {
            "CIC": (0.015, 0.072, 0.132, 0.784),
            "DBAR": (0.0, 0.066, 0.601, 0.357),
            "GPC": (0.126, 0.142, 0.672, 0.062),
            "QIC": (0.164, 0.085, 0.254, 0.5),
            "RJ1": (0.01, 0.3, 0.49, 0.212),
            "RJ2": (0.003, 0.189, 0.606, 0.208),
            "SC": (0.264, 0.193, 0.487, 0.058),
        },
        ("exch", 100): {
            "CIC": (0.004, 0.029, 0.079, 0.891),
            "DBAR": (0.0, 0.02, 0.629, 0.4),
            "GPC": (0.259, 0.175, 0.537, 0.03),
            "QIC": (0.117, 0.058, 0.245, 0.584),
            "RJ1": (0.0, 0.128, 0.601, 0.286),
            "RJ2": (0.0, 0.076, 0.655, 0.276),
            "SC": (0.368, 0.189, 0.418, 0.026),
        },
        ("un", 50): {
            "CIC": (0.013, 0.146, 0.073, 0.768),
            "DBAR": (0.003, 0.21, 0.514, 0.299),
            "GPC": (0.124, 0.327, 0.474, 0.076),
            "QIC": (0.142, 0.18, 0.196, 0.485),
            "RJ1": (0.022, 0.4, 0.421, 0.167),
            "RJ2": (0.011, 0.316, 0.492, 0.184),
            "SC": (0.317, 0.344, 0.276, 0.063),
        },
        ("un", 100): {
            "CIC": (0.003, 0.071, 0.04, 0.887),
            "DBAR": (0.0, 0.103, 0.558, 0.381),
            "GPC": (0.223, 0.295, 0.426, 0.056),
            "QIC": (0.115, 0.161, 0.15, 0.577),
            "RJ1": (0.005, 0.314, 0.452, 0.242),
            "RJ2": (0.001, 0.238, 0.533, 0.233),
            "SC": (0.351, 0.314, 0.289, 0.046),
        },
    },
    "9": {
        ("ar1", 50): {
            "CIC": (0.116, 0.705, 0.196),
            "DBAR": (0.057, 0.36, 0.648),
            "GPC": (0.049, 0.487, 0.464),
            "QIC": (0.221, 0.564, 0.226),
            "RJ1": (0.11, 0.303, 0.599),
            "RJ2": (0.068, 0.331, 0.605),
            "SC": (0.3, 0.453, 0.25),
        },
        ("ar1", 100): {
            "CIC": (0.078, 0.79, 0.139),
            "DBAR": (0.016, 0.359, 0.695),
            "GPC": (0.042, 0.467, 0.491),
            "QIC": (0.188, 0.598, 0.221),
            "RJ1": (0.064, 0.324, 0.62),
            "RJ2": (0.033, 0.34, 0.632),
            "SC": (0.31, 0.437, 0.255),
        },
        ("exch", 50): {
            "CIC": (0.151, 0.246, 0.607),
            "DBAR": (0.003, 0.054, 0.951),
            "GPC": (0.035, 0.274, 0.691),
            "QIC": (0.29, 0.216, 0.5),
            "RJ1": (0.017, 0.124, 0.861),
            "RJ2": (0.009, 0.071, 0.92),
            "SC": (0.363, 0.391, 0.247),
        },
        ("exch", 100): {
            "CIC": (0.071, 0.19, 0.743),
            "DBAR": (0.0, 0.006, 0.995),
            "GPC": (0.049, 0.349, 0.602),
            "QIC": (0.216, 0.172, 0.615),
            "RJ1": (0.0, 0.041, 0.96),
            "RJ2": (0.0, 0.012, 0.989),
            "SC": (0.303, 0.418, 0.279),
        },
    },
}

MSE = {
    "B1": {
        ("ar1", 50): {
            "beta0": (0.084, 0.083, 0.084, 0.093),
            "beta1": (0.15, 0.148, 0.15, 0.154),
            "beta2": (0.103, 0.1, 0.102, 0.116),
        },
        ("ar1", 100): {
            "beta0": (0.04, 0.041, 0.042, 0.042),
            "beta1": (0.07, 0.067, 0.068, 0.07),
            "beta2": (0.05, 0.047, 0.049, 0.049),
        },
        ("exch", 50): {
            "beta0": (0.113, 0.113, 0.11, 0.124),
            "beta1": (0.199, 0.199, 0.198, 0.214),
            "beta2": (0.107, 0.105, 0.099, 0.112),
        },
        ("exch", 100): {
            "beta0": (0.054, 0.053, 0.052, 0.056),
            "beta1": (0.09, 0.091, 0.09, 0.097),
            "beta2": (0.049, 0.047, 0.045, 0.048),
        },
        ("un", 50): {
            "beta0": (0.094, 0.094, 0.094, 0.105),
            "beta1": (0.169, 0.167, 0.169, 0.182),
            "beta2": (0.103, 0.098, 0.099, 0.112),
        },
        ("un", 100): {
            "beta0": (0.049, 0.048, 0.048, 0.05),
            "beta1": (0.083, 0.083, 0.084, 0.086),
            "beta2": (0.053, 0.05, 0.05, 0.052),
        },
    },
    "B2": {
        ("ar1", 50): {
            "beta0": (0.109, 0.098, 0.104, 0.109),
            "beta1": (0.204, 0.198, 0.202, 0.215),
            "beta2": (0.116, 0.089, 0.105, 0.101),
        },
        ("ar1", 100): {
            "beta0": (0.05, 0.048, 0.051, 0.052),
            "beta1": (0.1, 0.096, 0.1, 0.102),
            "beta2": (0.05, 0.038, 0.043, 0.041),
        },
        ("exch", 50): {
            "beta0": (0.157, 0.156, 0.149, 0.164),
            "beta1": (0.296, 0.3, 0.293, 0.317),
            "beta2": (0.108, 0.09, 0.079, 0.084),
        },
        ("exch", 100): {
            "beta0": (0.073, 0.071, 0.07, 0.079),
            "beta1": (0.134, 0.135, 0.132, 0.14),
            "beta2": (0.057, 0.045, 0.04, 0.042),
        },
        ("un", 50): {
            "beta0": (0.139, 0.134, 0.135, 0.155),
            "beta1": (0.241, 0.238, 0.24, 0.265),
            "beta2": (0.115, 0.09, 0.095, 0.104),
        },
        ("un", 100): {
            "beta0": (0.058, 0.056, 0.057, 0.059),
            "beta1": (0.117, 0.115, 0.117, 0.124),
            "beta2": (0.051, 0.041, 0.042, 0.043),
        },
    },
    "B3": {
        ("ar1", 50): {
            "beta0": (0.101, 0.094, 0.1, 0.113),
            "beta1": (0.159, 0.164, 0.16, 0.171),
            "beta2": (0.115, 0.12, 0.114, 0.128),
        },
        ("ar1", 100): {
            "beta0": (0.05, 0.046, 0.047, 0.049),
            "beta1": (0.08, 0.08, 0.081, 0.085),
            "beta2": (0.05, 0.052, 0.052, 0.055),
        },
        ("exch", 50): {
            "beta0": (0.111, 0.111, 0.108, 0.119),
            "beta1": (0.205, 0.206, 0.203, 0.209),
            "beta2": (0.129, 0.128, 0.121, 0.136),
        },
        ("exch", 100): {
            "beta0": (0.054, 0.054, 0.052, 0.056),
            "beta1": (0.094, 0.095, 0.095, 0.101),
            "beta2": (0.055, 0.052, 0.05, 0.053),
        },
        ("un", 50): {
            "beta0": (0.106, 0.104, 0.104, 0.112),
            "beta1": (0.182, 0.183, 0.182, 0.196),
            "beta2": (0.115, 0.111, 0.11, 0.118),
        },
        ("un", 100): {
            "beta0": (0.05, 0.049, 0.049, 0.051),
            "beta1": (0.087, 0.087, 0.087, 0.091),
            "beta2": (0.054, 0.05, 0.052, 0.052),
        },
    },
    "B4": {
        ("ar1", 50): {
            "beta0": (0.135, 0.126, 0.131, 0.136),
            "beta1": (0.231, 0.219, 0.227, 0.237),
            "beta2": (0.119, 0.097, 0.105, 0.108),
        },
        ("ar1", 100): {
            "beta0": (0.06, 0.052, 0.054, 0.055),
            "beta1": (0.11, 0.104, 0.106, 0.108),
            "beta2": (0.06, 0.049, 0.055, 0.053),
        },
        ("exch", 50): {
            "beta0": (0.159, 0.149, 0.145, 0.158),
            "beta1": (0.31, 0.311, 0.3, 0.322),
            "beta2": (0.117, 0.093, 0.084, 0.09),
        },
        ("exch", 100): {
            "beta0": (0.075, 0.072, 0.069, 0.076),
            "beta1": (0.14, 0.14, 0.133, 0.148),
            "beta2": (0.059, 0.049, 0.042, 0.048),
        },
        ("un", 50): {
            "beta0": (0.13, 0.122, 0.124, 0.129),
            "beta1": (0.252, 0.245, 0.249, 0.255),
            "beta2": (0.115, 0.094, 0.095, 0.103),
        },
        ("un", 100): {
            "beta0": (0.065, 0.063, 0.062, 0.068),
            "beta1": (0.11, 0.11, 0.109, 0.115),
            "beta2": (0.057, 0.044, 0.046, 0.045),
        },
    },
    "B5": {
        ("ar1", 50): {
            "beta0": (0.005, 0.009, 0.008, 0.005),
            "beta1": (0.006, 0.006, 0.006, 0.007),
            "beta2": (0.005, 0.005, 0.005, 0.005),
        },
        ("ar1", 100): {
            "beta0": (0.0, 0.002, 0.002, 0.002),
            "beta1": (0.0, 0.003, 0.003, 0.003),
            "beta2": (0.0, 0.002, 0.002, 0.002),
        },
        ("exch", 50): {
            "beta0": (0.006, 0.02, 0.007, 0.007),
            "beta1": (0.008, 0.008, 0.008, 0.008),
            "beta2": (0.005, 0.007, 0.005, 0.005),
        },
        ("exch", 100): {
            "beta0": (0.003, 0.003, 0.004, 0.003),
            "beta1": (0.004, 0.004, 0.004, 0.004),
            "beta2": (0.002, 0.002, 0.002, 0.002),
        },
        ("un", 50): {
            "beta0": (0.006, 0.019, 0.007, 0.006),
            "beta1": (0.006, 0.007, 0.006, 0.007),
            "beta2": (0.005, 0.006, 0.005, 0.005),
        },
        ("un", 100): {
            "beta0": (0.003, 0.003, 0.003, 0.003),
            "beta1": (0.003, 0.003, 0.003, 0.003),
            "beta2": (0.002, 0.002, 0.002, 0.002),
        },
    },
    "B6": {
        ("ar1", 50): {
            "beta0": (0.006, 0.026, 0.012, 0.006),
            "beta1": (0.008, 0.009, 0.008, 0.009),
            "beta2": (0.004, 0.007, 0.005, 0.004),
        },
        ("ar1", 100): {
            "beta0": (0.0, 0.006, 0.005, 0.003),
            "beta1": (0.0, 0.004, 0.004, 0.004),
            "beta2": (0.0, 0.002, 0.002, 0.002),
        },
        ("exch", 50): {
            "beta0": (0.008, 0.03, 0.01, 0.009),
            "beta1": (0.012, 0.012, 0.011, 0.013),
            "beta2": (0.004, 0.007, 0.004, 0.004),
        },
        ("exch", 100): {
            "beta0": (0.004, 0.014, 0.005, 0.004),
            "beta1": (0.006, 0.006, 0.006, 0.006),
            "beta2": (0.002, 0.003, 0.002, 0.002),
        },
        ("un", 50): {
            "beta0": (0.008, 0.029, 0.009, 0.008),
            "beta1": (0.011, 0.011, 0.011, 0.011),
            "beta2": (0.004, 0.007, 0.004, 0.004),
        },
        ("un", 100): {
            "beta0": (0.004, 0.005, 0.004, 0.004),
            "beta1": (0.005, 0.005, 0.005, 0.005),
            "beta2": (0.002, 0.002, 0.002, 0.002),
        },
    },
    "B7": {
        ("ar1", 50): {
            "beta0": (0.006, 0.012, 0.005, 0.006),
            "beta1": (0.006, 0.007, 0.006, 0.008),
            "beta2": (0.005, 0.006, 0.005, 0.006),
        },
        ("ar1", 100): {
            "beta0": (0.0, 0.005, 0.003, 0.003),
            "beta1": (0.0, 0.003, 0.003, 0.003),
            "beta2": (0.0, 0.002, 0.002, 0.002),
        },
        ("exch", 50): {
            "beta0": (0.006, 0.02, 0.009, 0.007),
            "beta1": (0.009, 0.009, 0.009, 0.009),
            "beta2": (0.004, 0.006, 0.004, 0.005),
        },
        ("exch", 100): {
            "beta0": (0.003, 0.01, 0.003, 0.003),
            "beta1": (0.004, 0.004, 0.004, 0.004),
            "beta2": (0.003, 0.004, 0.002, 0.003),
        },
        ("un", 50): {
            "beta0": (0.006, 0.026, 0.007, 0.006),
            "beta1": (0.007, 0.008, 0.007, 0.008),
            "beta2": (0.005, 0.007, 0.005, 0.005),
        },
        ("un", 100): {
            "beta0": (0.003, 0.004, 0.003, 0.003),
            "beta1": (0.004, 0.004, 0.004, 0.004),
            "beta2": (0.002, 0.002, 0.002, 0.003),
        },
    },
    "B8": {
        ("ar1", 50): {
            "beta0": (0.007, 0.029, 0.01, 0.008),
            "beta1": (0.008, 0.009, 0.008, 0.009),
            "beta2": (0.005, 0.007, 0.005, 0.005),
        },
        ("ar1", 100): {
            "beta0": (0.0, 0.012, 0.004, 0.003),
            "beta1": (0.0, 0.004, 0.004, 0.004),
            "beta2": (0.0, 0.003, 0.002, 0.002),
        },
        ("exch", 50): {
            "beta0": (0.009, 0.029, 0.013, 0.009),
            "beta1": (0.012, 0.013, 0.012, 0.013),
            "beta2": (0.005, 0.007, 0.004, 0.004),
        },
        ("exch", 100): {
            "beta0": (0.005, 0.015, 0.009, 0.004),
            "beta1": (0.006, 0.006, 0.006, 0.006),
            "beta2": (0.002, 0.004, 0.003, 0.002),
        },
        ("un", 50): {
            "beta0": (0.008, 0.034, 0.01, 0.008),
            "beta1": (0.011, 0.011, 0.011, 0.012),
            "beta2": (0.005, 0.008, 0.004, 0.005),
        },
        ("un", 100): {
            "beta0": (0.004, 0.007, 0.004, 0.004),
            "beta1": (0.005, 0.005, 0.005, 0.005),
            "beta2": (0.002, 0.002, 0.002, 0.002),
        },
    },
}
