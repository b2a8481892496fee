"""Frozen Chebyshev data for K0 on [2, 700].

Generated by tools/gen_k0_table.py (mpmath, 50 digits); do not edit.
Each segment is (x_lo, x_hi, coefficients) for g(x) = sqrt(x) e^x K0(x)
as a Chebyshev series in t = affine(1/x) mapping [1/x_hi, 1/x_lo]
to [-1, 1]."""

SEGMENTS = (
    (2.0, 4.0, (
        1.2040693803734015,
        -0.014208666237656804,
        0.0003064272822336442,
        -1.0388073165348508e-05,
        4.51969105535064e-07,
        -2.3153832593402718e-08,
        1.3338417019301037e-09,
        -8.402937057782789e-11,
        5.683339792474704e-12,
        -4.073991543679925e-13,
        3.066059145629367e-14,
        -2.4053531195883757e-15,
        1.9561245666293759e-16,
        -1.6417512585820552e-17,
        1.4169296364153648e-18,
        -1.253806318142735e-19,
        1.1346882992516691e-20,
        -1.0480341859054256e-21,
        9.861621115035398e-23,
        -9.43894538680886e-24,
        9.17734035116551e-25,
        -9.053505508372377e-26,
        9.052575066511234e-27,
        -9.166049868083416e-28,
        9.389421000665957e-29,
        -9.61942588818512e-30,
    )),
    (4.0, 8.0, (
        1.2266681992105761,
        -0.008178177614510607,
        0.00010759629638663574,
        -2.345268268063079e-06,
        6.820230781941003e-08,
        -2.406719105464957e-09,
        9.784741936463527e-11,
        -4.438445558239052e-12,
        2.1984688218091495e-13,
        -1.171066368384861e-14,
        6.632866637636558e-16,
        -3.9602331502059645e-17,
        2.4756425069754673e-18,
        -1.6115138584889916e-19,
        1.0874868627892131e-20,
        -7.579714585827123e-22,
        5.439660931072798e-23,
        -4.0089873184338404e-24,
        3.02731402494802e-25,
        -2.3376966445073757e-26,
        1.8428207461218807e-27,
        -1.4807737731418343e-28,
        1.2112309044701261e-29,
        -1.007356900649607e-30,
        8.508898594235893e-32,
        -7.23808843720913e-33,
    )),
    (8.0, 16.0, (
        1.2393681420263374,
        -0.004444552157504706,
        3.3220916693042564e-05,
        -4.2917128144551213e-07,
        7.653018040334182e-09,
        -1.7031840598563625e-10,
        4.471938217030697e-12,
        -1.3370345098650646e-13,
        4.443364775833709e-15,
        -1.6130693834092808e-16,
        6.314016437605706e-18,
        -2.6381034563356724e-19,
        1.1671833594507444e-20,
        -5.432962197893989e-22,
        2.646489218781156e-23,
        -1.343092442074373e-24,
        7.074709180099242e-26,
        -3.8554931363377624e-27,
        2.167769527182151e-28,
        -1.2544627614580444e-29,
        7.4557780367425065e-31,
        -4.5426132553257986e-32,
        2.8325282544204418e-33,
        -1.8049027781529887e-34,
        1.1736993795694721e-35,
        -7.744131910015458e-37,
    )),
    (16.0, 32.0, (
        1.2461646764044434,
        -0.00232763766760472,
        9.379972930856485e-06,
        -6.728472729592639e-08,
        6.834456886991079e-10,
        -8.86042254996164e-12,
        1.382450577573917e-13,
        -2.5003052959160397e-15,
        5.1078631300681314e-17,
        -1.1566402510037297e-18,
        2.861959251228054e-20,
        -7.652171736975757e-22,
        2.1911850606418368e-23,
        -6.670762838454694e-25,
        2.1460586868520118e-26,
        -7.2587432834928615e-28,
        2.57008480384669e-29,
        -9.490194212526555e-31,
        3.6427850925494635e-32,
        -1.4493984422597086e-33,
        5.962783231895068e-35,
        -2.530761641157987e-36,
        1.1059423413341288e-37,
        -4.967291008561268e-39,
        2.289356384755662e-40,
        -1.0785810490341732e-41,
    )),
    (32.0, 64.0, (
        1.2496920906184945,
        -0.001192824775549585,
        2.505667879934544e-06,
        -9.540606960474795e-09,
        5.2303751095721706e-11,
        -3.7164153539393237e-13,
        3.223606381334924e-15,
        -3.2844127739702237e-17,
        3.826863098794854e-19,
        -4.999953531171586e-21,
        7.216286033869604e-23,
        -1.1369994025358998e-24,
        1.9371919780587477e-26,
        -3.5412216493184465e-28,
        6.90020888876911e-30,
        -1.4252624438902145e-31,
        3.1059152338511056e-33,
        -7.111513369619981e-35,
        1.7047224664483322e-36,
        -4.2647436471666764e-38,
        1.1103611165045915e-39,
        -3.0011230680605134e-41,
        8.401945723486314e-43,
        -2.4315134630583575e-44,
        7.26071182303129e-46,
        -2.229448133432394e-47,
    )),
    (64.0, 128.0, (
        1.2514908333071162,
        -0.0006040499536652954,
        6.485733731399748e-07,
        -1.2752465257389647e-09,
        3.645607585077369e-12,
        -1.3634083484324917e-14,
        6.280259357616266e-17,
        -3.427147462447053e-19,
        2.1563088779974725e-21,
        -1.5333410711409078e-23,
        1.2135865070521805e-25,
        -1.0562265775719197e-27,
        1.0010344188156616e-29,
        -1.024801302381348e-31,
        1.125608313660513e-33,
        -1.3188342005145186e-35,
        1.6401972167853249e-37,
        -2.155929030625069e-39,
        2.983771836227626e-41,
        -4.333520655248442e-43,
        6.585243735189089e-45,
        -1.0441525415088868e-46,
        1.7264004054341666e-48,
        -2.1073721752650005e-50,
        -2.3386691213306712e-51,
        1.675617875942415e-50,
    )),
    (128.0, 256.0, (
        1.2523993548678825,
        -0.00030398665000139034,
        1.6505996404925033e-07,
        -1.6502517813937564e-10,
        2.4116402466921803e-13,
        -4.634590729100855e-16,
        1.1025738798542622e-18,
        -3.1228938415461796e-21,
        1.0247766554102817e-23,
        -3.818582916675477e-26,
        1.5910525376133747e-28,
        -7.322878451577716e-31,
        3.686400416173027e-33,
        -2.0132536775127374e-35,
        1.1846452059702847e-37,
        -7.466755285356471e-40,
        5.015798375600311e-42,
        -3.575252148559395e-44,
        2.6937489970257004e-46,
        -2.1248479445232955e-48,
        1.9942936682995614e-50,
        9.714471734758173e-51,
        1.901774889873293e-51,
        8.480888022407928e-51,
        -3.0325599595276834e-51,
        1.7540018409980034e-50,
    )),
    (256.0, 700.0, (
        1.2528969417061322,
        -0.00019350198386052677,
        6.70637317505186e-08,
        -4.2928995961852423e-11,
        4.028935323664469e-14,
        -4.987382657121691e-17,
        7.665539794257009e-20,
        -1.4068263513936314e-22,
        2.9999901635206027e-25,
        -7.285245773865949e-28,
        1.983842416258819e-30,
        -5.9841158990088826e-33,
        1.9797798556252943e-35,
        -7.12518203388854e-38,
        2.770397565409921e-40,
        -1.1569164589280159e-42,
        5.162666671416728e-45,
        -2.4513467135895966e-47,
        1.2356396852041613e-49,
        1.233583712350244e-50,
        3.289556566267318e-51,
        8.892082593191344e-51,
        1.4905803190898784e-51,
        8.506587683081891e-51,
        -3.109658941549574e-51,
        1.7321571294251345e-50,
    )),
)
