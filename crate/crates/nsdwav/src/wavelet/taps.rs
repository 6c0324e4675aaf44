//! Tabulated orthonormal lowpass filter taps.
//!
//! Daubechies filters were produced by spectral factorization of the
//! Bernstein polynomial at 60-digit working precision; Coiflet filters by
//! Newton refinement of the defining moment and orthonormality equations at
//! the same precision, then rounded to f64. All tables satisfy
//! sum(h) = sqrt(2), pairwise-shift orthonormality and the vanishing-moment
//! conditions to within a few ulps.

// 17-significant-digit decimal literals are deliberate: they pin each tap to
// its nearest f64.
#![allow(clippy::excessive_precision, clippy::approx_constant)]

pub(crate) const DB1: [f64; 2] = [
    0.70710678118654752,
    0.70710678118654752,
];

pub(crate) const DB2: [f64; 4] = [
    -0.12940952255126038,
    0.22414386804201338,
    0.83651630373780791,
    0.48296291314453414,
];

pub(crate) const DB3: [f64; 6] = [
    0.035226291885709537,
    -0.085441273882026662,
    -0.13501102001025459,
    0.45987750211849157,
    0.80689150931109258,
    0.33267055295008262,
];

pub(crate) const DB4: [f64; 8] = [
    -0.010597401785069032,
    0.032883011666885200,
    0.030841381835560764,
    -0.18703481171909308,
    -0.027983769416859854,
    0.63088076792985891,
    0.71484657055291565,
    0.23037781330889650,
];

pub(crate) const DB5: [f64; 10] = [
    0.0033357252854737713,
    -0.012580751999081999,
    -0.0062414902127982743,
    0.077571493840045714,
    -0.032244869584638375,
    -0.24229488706638203,
    0.13842814590132073,
    0.72430852843777293,
    0.60382926979718967,
    0.16010239797419291,
];

pub(crate) const DB6: [f64; 12] = [
    -0.0010773010853084796,
    0.0047772575109455106,
    0.00055384220116149614,
    -0.031582039317486030,
    0.027522865530305729,
    0.097501605587323049,
    -0.12976686756726194,
    -0.22626469396543982,
    0.31525035170919763,
    0.75113390802109535,
    0.49462389039845309,
    0.11154074335010946,
];

pub(crate) const DB7: [f64; 14] = [
    0.00035371379997452025,
    -0.0018016407040474909,
    0.00042957797292136652,
    0.012550998556099841,
    -0.016574541630666881,
    -0.038029936935014414,
    0.080612609151083072,
    0.071309219266830265,
    -0.22403618499387498,
    -0.14390600392856498,
    0.46978228740519312,
    0.72913209084623512,
    0.39653931948191731,
    0.077852054085009179,
];

pub(crate) const DB8: [f64; 16] = [
    -0.00011747678412476953,
    0.00067544940645056937,
    -0.00039174037337694705,
    -0.0048703529934515743,
    0.0087460940474057767,
    0.013981027917398282,
    -0.044088253930794752,
    -0.017369301001807546,
    0.12874742662047846,
    0.00047248457391328277,
    -0.28401554296154693,
    -0.015829105256349306,
    0.58535468365420671,
    0.67563073629728981,
    0.31287159091429997,
    0.054415842243104010,
];

pub(crate) const DB9: [f64; 18] = [
    3.9347320316271599e-5,
    -0.00025196318894271014,
    0.00023038576352319597,
    0.0018476468830562265,
    -0.0042815036824634298,
    -0.0047232047577513973,
    0.022361662123679097,
    0.00025094711483145196,
    -0.067632829061329974,
    0.030725681479333379,
    0.14854074933810638,
    -0.096840783222976461,
    -0.29327378327917491,
    0.13319738582500758,
    0.65728807805130054,
    0.60482312369011111,
    0.24383467461259035,
    0.038077947363878347,
];

pub(crate) const DB10: [f64; 20] = [
    -1.3264202894521245e-5,
    9.3588670320069591e-5,
    -0.00011646685512928545,
    -0.00068585669495971163,
    0.0019924052951850561,
    0.0013953517470529012,
    -0.010733175483330575,
    0.0036065535669561697,
    0.033212674059341002,
    -0.029457536821875813,
    -0.071394147166397087,
    0.093057364603572351,
    0.12736934033579326,
    -0.19594627437737704,
    -0.24984642432731538,
    0.28117234366057746,
    0.68845903945360357,
    0.52720118893172559,
    0.18817680007769149,
    0.026670057900555554,
];

pub(crate) const COIF1: [f64; 6] = [
    -0.015655728135791993,
    -0.072732619512526448,
    0.38486484686485775,
    0.85257202021160042,
    0.33789766245748177,
    -0.072732619512526448,
];

pub(crate) const COIF2: [f64; 12] = [
    -0.00072054944552034700,
    -0.0018232088709110321,
    0.0056114348193688342,
    0.023680171946847769,
    -0.059434418646431087,
    -0.076488599078280754,
    0.41700518442323905,
    0.81272363544941350,
    0.38611006682276285,
    -0.067372554723725594,
    -0.041464936786871774,
    0.016387336463203640,
];

pub(crate) const COIF3: [f64; 18] = [
    -3.4599773197272774e-5,
    -7.0983302506379006e-5,
    0.00046621695982040287,
    0.0011175187708306302,
    -0.0025745176881367970,
    -0.0090079761367306239,
    0.015880544863669451,
    0.034555027573297733,
    -0.082301927106299818,
    -0.071799821619154834,
    0.42848347637736998,
    0.79377722262608717,
    0.40517690240911820,
    -0.061123390002972541,
    -0.065771911281469367,
    0.023452696142077166,
    0.0077825964256727458,
    -0.0037935128643808017,
];

pub(crate) const COIF4: [f64; 24] = [
    -1.7849909144933467e-6,
    -3.2596479400307507e-6,
    3.1229861599195265e-5,
    6.2338854312787181e-5,
    -0.00025997433712225680,
    -0.00058902022463321648,
    0.0012665610789256602,
    0.0037514346971460863,
    -0.0056582838001308837,
    -0.015211728187697212,
    0.025082253337949607,
    0.039334422605589146,
    -0.096220424535952637,
    -0.066627472366817157,
    0.43438603311435654,
    0.78223893442428259,
    0.41530842700068227,
    -0.056077319603569256,
    -0.081266710249193723,
    0.026682304669604833,
    0.016068947131575027,
    -0.0073461679362680498,
    -0.0016294924252267858,
    0.00089231390253700296,
];

pub(crate) const COIF5: [f64; 30] = [
    -5.2253009497252891e-7,
    -4.5141035518122574e-7,
    1.1811041461687691e-5,
    9.5368632930704987e-6,
    -0.00013022310305504797,
    -9.4711445829852245e-5,
    0.00094043831747136798,
    0.00057076078598121762,
    -0.0051007780646397196,
    -0.0019772543093881663,
    0.020911602225268425,
    0.0033020842240095947,
    -0.063984009364835969,
    0.0010459641436845724,
    0.14857279440453819,
    -0.018127839435727883,
    -0.28122464997258030,
    0.044268430890797290,
    0.62947198294577771,
    0.64576206813313375,
    0.27248374298294411,
    0.055278895666937380,
    -0.010909045909170986,
    -0.033143480572509338,
    -0.0058216793305945466,
    0.012833094074586997,
    0.0021415272356877060,
    -0.0029168919723689950,
    -0.00025620969163013391,
    0.00029657555030306979,
];
