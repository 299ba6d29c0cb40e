"""Reference Δ_max / E_r tables for the quartic problems.

Δ_max entries are the 7-decimal printed values; E_r entries keep all printed digits.
Keys are (1/δ, m); each value maps scheme -> (Δ_max, E_r).
"""

TABLE_MIXED = {
    (8, 2): {"mdcm": (0.0189985, 0.18939563036353016), "mscm": (0.026689, 0.13872936965799454), "vhcm": (0.022535, 0.1537912607587714)},
    (8, 4): {"mdcm": (0.0234427, 0.00022319627836016784), "mscm": (0.025228, 0.07639507127320637), "vhcm": (0.0194695, 0.0031632654630811886)},
    (8, 8): {"mdcm": (0.0245057, 0.045576525052941484), "mscm": (0.0250035, 0.06681675947735737), "vhcm": (0.0195917, 0.003092732426011935)},
    (16, 2): {"mdcm": (0.0045721, 0.21969781457543527), "mscm": (0.0055334, 0.05563531454269347), "vhcm": (0.0050141, 0.06645851712197658)},
    (16, 4): {"mdcm": (0.0056769, 0.031138402603877086), "mscm": (0.0059001, 0.006947535851698679), "vhcm": (0.0051803, 0.03552875692680986)},
    (16, 8): {"mdcm": (0.0059471, 0.014975760039912226), "mscm": (0.0060094, 0.025595878730503802), "vhcm": (0.0053329, 0.007116942243142562)},
    (32, 2): {"mdcm": (0.0011208, 0.23484890571368547), "mscm": (0.001241, 0.15281765506369993), "vhcm": (0.0011761, 0.16221928860708748)},
    (32, 4): {"mdcm": (0.0013963, 0.04681920610892121), "mscm": (0.0014242, 0.027776237957975052), "vhcm": (0.0013342, 0.04960071388632059)},
    (32, 8): {"mdcm": (0.0014644, 0.0003245869350697224), "mscm": (0.0014721, 0.0049854588869493455), "vhcm": (0.0013876, 0.011555923639958643)},
    (64, 2): {"mdcm": (0.0002774, 0.24242442335040928), "mscm": (0.0002925, 0.20140880160033703), "vhcm": (0.0002843, 0.20704345492289422)},
    (64, 4): {"mdcm": (0.0003462, 0.05465993508308505), "mscm": (0.0003497, 0.04513808493114387), "vhcm": (0.0003384, 0.05618760598070444)},
    (64, 8): {"mdcm": (0.0003633, 0.00797462997919259), "mscm": (0.0003643, 0.005320158602747445), "vhcm": (0.0002925, 0.013634200316873636)},
}
# printed v_max per 1/δ: (constant horizon, variable horizon)
V_MAX_MIXED = {
    8: (0.0234375, 0.0195312),
    16: (0.0058594, 0.0053711),
    32: (0.0014648, 0.0014038),
    64: (0.0003662, 0.0003586),
}

TABLE_DIRICHLET = {
    (8, 2): {"mdcm": (0.0015401, 0.2016170351267689), "mscm": (0.0020472, 0.06127025368833336), "vhcm": (0.0017665, 0.06434373068048209)},
    (8, 4): {"mdcm": (0.0019049, 0.012493519958), "mscm": (0.0020226, 0.04850043665385476), "vhcm": (0.001635, 0.014928462949345231)},
    (8, 8): {"mdcm": (0.0019929, 0.0331279533224191), "mscm": (0.0020258, 0.05016550895438604), "vhcm": (0.0016605, 0.0004704127878776099)},
    (16, 2): {"mdcm": (0.0003734, 0.22578338483381227), "mscm": (0.0004367, 0.0944365624484305), "vhcm": (0.0004021, 0.10520561104488288)},
    (16, 4): {"mdcm": (0.0004642, 0.03746032984032576), "mscm": (0.0004789, 0.006970876479976996), "vhcm": (0.000431, 0.040904248273387206)},
    (16, 8): {"mdcm": (0.0004865, 0.008803538547908885), "mscm": (0.0004906, 0.017310979031270848), "vhcm": (0.0004455, 0.00856123277456941)},
    (32, 2): {"mdcm": (9.19e-05, 0.23788540718167037), "mscm": (9.98e-05, 0.17223620186125568), "vhcm": (9.55e-05, 0.1802703700196417)},
    (32, 4): {"mdcm": (0.0001145, 0.049967760986964954), "mscm": (0.0001164, 0.034728212000686), "vhcm": (0.0001104, 0.05217655282362489)},
    (32, 8): {"mdcm": (0.0001202, 0.0033976022233445646), "mscm": (0.0001207, 0.0008531730541790794), "vhcm": (0.0001151, 0.012307868862550942)},
    (64, 2): {"mdcm": (2.28e-05, 0.24394105977135036), "mscm": (2.38e-05, 0.21112255718462616), "vhcm": (2.32e-05, 0.21575674921153315)},
    (64, 4): {"mdcm": (2.84e-05, 0.05623237116469676), "mscm": (2.87e-05, 0.048612301320281354), "vhcm": (2.79e-05, 0.057449163616189465)},
    (64, 8): {"mdcm": (2.99e-05, 0.009505537756285721), "mscm": (2.99e-05, 0.007383440771263794), "vhcm": (2.92e-05, 0.014016858778185955)},
}
# printed v_max per 1/δ: (constant horizon, variable horizon)
V_MAX_DIRICHLET = {
    8: (0.001929012346, 0.001659754372),
    16: (0.000482253086, 0.00044934936),
    32: (0.000120563272, 0.000116497401),
    64: (3.0140818e-05, 2.9635527e-05),
}

TABLE_DIRICHLET_A34 = {
    (8, 2): {"mdcm": (0.0017871, 0.21438198477928305), "mscm": (0.0022283, 0.02043975351236474), "vhcm": (0.0019833, 0.027478500421319264)},
    (8, 4): {"mdcm": (0.0022163, 0.025729017096367362), "mscm": (0.0022409, 0.014897390530104738), "vhcm": (0.0019805, 0.02885725875859895)},
    (8, 8): {"mdcm": (0.0023208, 0.02023648049134907), "mscm": (0.0022886, 0.006087077080257216), "vhcm": (0.002031, 0.004068147175928762)},
    (16, 2): {"mdcm": (0.0004366, 0.2321981894459193), "mscm": (0.0004917, 0.1353091784039366), "vhcm": (0.0004616, 0.1452483176298157)},
    (16, 4): {"mdcm": (0.0005436, 0.044084026844382736), "mscm": (0.0005466, 0.03878637756285524), "vhcm": (0.0005147, 0.046830792425876885)},
    (16, 8): {"mdcm": (0.00057, 0.0023667456336188904), "mscm": (0.0005659, 0.004869687299632944), "vhcm": (0.0005344, 0.010456991628599597)},
    (32, 2): {"mdcm": (0.0001079, 0.24122767771286374), "mscm": (0.0001148, 0.19284022571017426), "vhcm": (0.000111, 0.1988957873557046)},
    (32, 4): {"mdcm": (0.0001346, 0.05343779881961292), "mscm": (0.000135, 0.05084016380347633), "vhcm": (0.000131, 0.0547183990478962)},
    (32, 8): {"mdcm": (0.0001412, 0.006796241671615282), "mscm": (0.0001407, 0.010451276475890435), "vhcm": (0.0001368, 0.012938404917037115)},
    (64, 2): {"mdcm": (2.68e-05, 0.24461012951104147), "mscm": (2.77e-05, 0.2203915453556938), "vhcm": (2.72e-05, 0.22478469604961734)},
    (64, 4): {"mdcm": (3.35e-05, 0.05672545870994404), "mscm": (3.35e-05, 0.05543066589550721), "vhcm": (3.3e-05, 0.05867943995351454)},
    (64, 8): {"mdcm": (3.51e-05, 0.009900291732917996), "mscm": (3.51e-05, 0.011742162479606442), "vhcm": (3.46e-05, 0.014324200994094661)},
}
# printed v_max per 1/δ: (constant horizon, variable horizon)
V_MAX_DIRICHLET_A34 = {
    8: (0.002274794507, 0.002039324018),
    16: (0.000568698627, 0.000540013685),
    32: (0.000142174657, 0.000138635843),
    64: (3.5543664e-05, 3.5104238e-05),
}
