// Chebyshev coefficients (interval [0,1]) for the Riemann-Siegel remainder
// C0(p) = Psi(p) = cos(2*pi*(p^2-p-1/16))/cos(2*pi*p),  C1(p) = -Psi'''(p)/(96*pi^2).
#pragma once

static const double kC0[41] = {
    0.64266728623976837755,
    -1.1082195139406664874e-51,
    0.27197299999785506708,
    -2.9335222427841171726e-51,
    0.010738605819340284154,
    1.2385982802866272507e-51,
    -0.0013743815296336614438,
    1.5645451961515291587e-51,
    -0.00012468221880320677228,
    -4.1721205230707444232e-51,
    -5.7645997067830480365e-7,
    -1.8904921120164310668e-51,
    2.7280674295804522256e-7,
    -1.5645451961515291587e-51,
    8.0779530595004706241e-9,
    1.3037876634596076323e-51,
    -2.0884608068869654474e-10,
    7.1056427658548615958e-51,
    -1.3115561854739527051e-11,
    2.3468177942272937381e-51,
    -1.4207987228087185165e-14,
    -8.930945494698312281e-51,
    1.0271701357931161578e-14,
    7.8227259807576457936e-52,
    1.3974598819518374434e-16,
    -1.7601133456704703036e-51,
    -4.4841187339522883256e-18,
    9.4524605600821553339e-51,
    -1.1830599573845289e-19,
    -1.0430301307676861058e-51,
    9.3898695603999355834e-22,
    1.3429012933633958612e-50,
    5.6018228473206966045e-23,
    2.4446018689867643105e-51,
    1.0023543875611833426e-25,
    6.1278020182601558716e-51,
    -1.7592985566214657588e-26,
    -9.9902729712592434822e-51,
    -1.4854499418667773324e-28,
    1.1587412858997262832e-50,
    3.7497489696895336931e-30,
};

static const double kC1[49] = {
    -1.3636554643327528807e-53,
    0.010697913921003000771,
    -2.7273109286655057614e-53,
    0.017170651243377883821,
    -8.5228466520797055043e-54,
    0.0027932111497884710902,
    -6.3069065225389820732e-53,
    -0.000036375653719275042398,
    -3.7500525269150704219e-53,
    -0.000027108955231150887012,
    2.3863970625823175412e-53,
    -1.0483749866752773376e-6,
    6.8182773216637644034e-54,
    5.8864671665275718452e-8,
    8.8637605181628937244e-53,
    4.322967268502779053e-9,
    -2.011391809890810499e-52,
    -1.1369591588273711745e-11,
    -4.6023371921230409723e-53,
    -6.6998339103553274809e-12,
    -9.0342174512044878345e-53,
    -1.0079997652808474909e-13,
    5.2841649242894174127e-53,
    5.1524880092221162994e-15,
    4.2614233260398527521e-53,
    1.5216954471836970996e-16,
    9.886502116412458385e-53,
    -1.8619464833687101047e-18,
    -1.4147925442452311137e-52,
    -1.1301846184246265271e-19,
    1.2102442245953181816e-52,
    -9.6503064768571034705e-23,
    -3.1193618746611722146e-52,
    5.2266106854276171993e-23,
    4.005737926477461587e-53,
    4.6300490546114011766e-25,
    3.2386817277902880916e-53,
    -1.6018105598830104799e-26,
    4.9432510582062291925e-53,
    -2.6582049781870995617e-28,
    3.6563012137421936613e-52,
    3.1439928013543019191e-30,
    -1.7258764470461403646e-52,
    9.2047450585438699278e-32,
    3.1108390280090925091e-53,
    -2.7349728761759795224e-34,
    -6.7756630884033658759e-53,
    -2.2661389372140039547e-35,
    2.402377400054966989e-52,
};

