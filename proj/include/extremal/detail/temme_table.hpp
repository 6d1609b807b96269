// Generated by tests/oracle/gen_reference.py -- do not edit by hand.
//
// Chebyshev tables for the correction term of the uniform large-shape
// expansion of the regularized incomplete gamma functions,
//   Q(a,x) = erfc(eta sqrt(a/2))/2 + exp(-a eta^2/2)/sqrt(2 pi a) * T(a,eta),
//   T(a,eta) ~ sum_k c_k(eta) a^-k,   eta^2/2 = x/a - 1 - log(x/a).
// Each row holds Chebyshev coefficients of c_k on |eta| <= kTemmeEtaMax.
#pragma once

namespace extremal::detail {

inline constexpr int kTemmeOrder = 9;
inline constexpr int kTemmeChebDegree = 40;
inline constexpr double kTemmeEtaMax = 0.98;

inline constexpr double kTemmeCheb[9][40] = {
    {-0.6806300327780684,0.08238198972291806,-0.0069358705701853055,0.00022144685874599937,
     4.680173177343109e-05,-1.0208739318166088e-05,9.746241971878107e-07,-5.272321024984475e-09,
     -1.4854810456020933e-08,2.6957240991171104e-09,-2.2787534881940423e-10,-5.392247587168698e-12,
     4.9361083410881995e-12,-8.043577138491021e-13,6.00163445939172e-14,3.2666059191763263e-15,
     -1.6745869088426068e-15,2.510973127815853e-16,-1.6393465336138283e-17,-1.4917131382306727e-18,
     5.748231107617036e-19,-8.007676027402978e-20,4.48297912004698e-21,6.2346873678715845e-22,
     -1.9870630021953377e-22,2.5815433351402048e-23,-1.1960879431722027e-24,-2.4988727589875336e-25,
     6.896782916627965e-26,-8.364165210151392e-27,3.014813773650919e-28,9.772179338878952e-29,
     -2.398582369542554e-29,2.713015779253194e-30,-6.737120644665894e-32,-3.7588443015200073e-32,
     8.34641896449158e-33,-8.783565812505115e-34,1.0854576526126877e-35,1.3999744224895067e-35},
    {-0.0010313331970006345,-0.004098386923424885,0.0013571984928851257,-0.0002309463893866357,
     2.044582515482067e-05,6.967694554909768e-07,-5.759262096711343e-07,1.0144337719806553e-07,
     -8.24945254121598e-09,-4.714814620912931e-10,2.6558069192769825e-10,-4.3084104204697745e-11,
     3.086924362662649e-12,2.7098966192830616e-13,-1.165461302556045e-13,1.7499433612515776e-14,
     -1.0890382696015548e-15,-1.3890985140609447e-16,4.922824287086495e-17,-6.876801868740951e-18,
     3.6273718862489976e-19,6.636917754907183e-20,-2.0227895934437447e-20,2.635022041576177e-21,
     -1.129257079597625e-22,-3.023928439962224e-23,8.139373997982513e-24,-9.890523371492015e-25,
     3.19126188971813e-26,1.3308677892226538e-26,-3.2206503252445765e-27,3.6460550899698123e-28,
     -7.539742392511506e-30,-5.703130498565217e-30,1.2565724285028594e-30,-1.321770395236981e-31,
     1.0225621661322443e-33,2.3922472778615525e-33,-4.8448987478297836e-34,4.8122112216637337e-35},
    {0.008927597079692495,-0.0025966233870151254,0.0003162642298809431,1.5261238671499338e-05,
     -1.4218598034659947e-05,2.9201130784457397e-06,-2.713289021764546e-07,-1.767683500546532e-08,
     1.1002882101138382e-08,-1.9634127970910775e-09,1.5341815803528293e-10,1.4643940519063076e-11,
     -6.774864733298168e-12,1.0899222330083185e-12,-7.233371853258054e-14,-9.81820562654703e-15,
     3.682913365046517e-15,-5.430625645356872e-16,3.01473033549777e-17,5.796557767372971e-18,
     -1.8505746129119295e-18,2.5202855228361077e-19,-1.1268581034612413e-20,-3.1448420353217862e-21,
     8.803060789993539e-22,-1.1108535244443075e-22,3.716430411062508e-24,1.6058110179991311e-24,
     -4.01996283537126e-25,4.7027058112348405e-26,-1.0037279058089635e-27,-7.831577279315832e-28,
     1.7779149467349292e-28,-1.925750402690379e-29,1.910307724292891e-31,3.593943591429362e-31,
     -1.1426293445818626e-31,4.871819017161445e-32,7.732988231714186e-33,9.792952669009055e-33},
    {0.0008026717617093348,0.00041106440812744877,-0.0002551090012873546,6.133058462488812e-05,
     -6.648521088869783e-06,-5.420623030176528e-07,3.6888491199521313e-07,-7.355247672412024e-08,
     6.345714793914284e-09,6.775162593837305e-10,-3.3896788956197563e-10,5.895997833533567e-11,
     -4.202215140148688e-12,-6.150806199357962e-13,2.454321582011499e-13,-3.8420119823515766e-14,
     2.254583772900998e-15,4.590752429822051e-16,-1.5410633740389561e-16,2.202775819959401e-17,
     -1.0305813921266839e-18,-3.012670332542803e-19,8.794177477258282e-20,-1.1567165337086925e-20,
     3.917868867013551e-22,1.5346730048067712e-22,-5.444196622515031e-23,-1.4996414722748445e-23,
     2.1672304576079796e-25,-6.387849273201075e-23,3.147667040398103e-23,7.6834600914171e-24,
     -7.309981127941895e-24,4.465904550300962e-24,-2.4928320731061446e-23,5.892066725586228e-24,
     2.4787080099379624e-23,-2.701964966621196e-23,-5.0513683916398016e-24,-6.551784436062453e-24},
    {-0.0019596331408756615,0.0007452669547971604,-0.00010895971916287717,-1.131371407284221e-05,
     9.19343868003216e-06,-2.1393456454299356e-06,2.1100220187087014e-07,2.5364215209981903e-08,
     -1.4100074360833581e-08,2.6981859075739466e-09,-2.0981972586785696e-10,-3.3266545042257964e-11,
     1.4298792956624385e-11,-2.3990605943374927e-12,1.5150339280939838e-13,2.8127852116757104e-14,
     -6.3316685363326504e-15,-4.4101375877966344e-16,9.756212828314883e-16,-8.879433982865194e-16,
     3.2909515875404025e-16,-3.6702865120045466e-15,2.842605901511332e-15,1.3026512832877878e-15,
     1.6400597399291287e-15,4.440951087556565e-15,1.243497242601119e-15,3.3903493640993e-15,
     -5.607476099274096e-17,1.0459345572947646e-14,-5.158216060979019e-15,-1.2605031101038233e-15,
     1.1988233029505441e-15,-7.323890660092178e-16,4.08818423448765e-15,-9.662849271629323e-16,
     -4.065022983246509e-15,4.431159152048014e-15,8.284125663409526e-16,1.0744772761862943e-15},
    {-0.0003686267304593511,-0.00020523402995999487,0.000158132939843525,-4.454432184584114e-05,
     5.1214738014351184e-06,6.653277242627414e-07,-2.966597033896734e-07,1.8590965185971042e-07,
     1.0747788290165678e-07,1.5501834748038048e-07,-4.3253921806772905e-08,-1.1198339893800182e-07,
     -2.284076199255099e-08,2.990090554566397e-08,-5.571595067693148e-08,1.7818214979343597e-07,
     -2.1356579371304712e-07,8.943151967033093e-08,-4.348385719976284e-08,3.5298037195825254e-08,
     -1.3152239642851178e-08,1.5031713308262543e-07,-1.1645281777668081e-07,-5.336559918341364e-08,
     -6.71893581621817e-08,-1.8193464567883844e-07,-5.094297615918112e-08,-1.3889414427892037e-07,
     2.2972429927017883e-09,-4.284932589341969e-07,2.1131922592746064e-07,5.1639663476418035e-08,
     -4.9112795860818536e-08,3.0004150398759166e-08,-1.67482695112558e-07,3.958627952784145e-08,
     1.665338365101253e-07,-1.8153352068207928e-07,-3.393799332827818e-08,-4.401864977507414e-08},
    {-0.8995462834000885,0.19145070073218412,-0.039605280496583906,-0.8131880095897033,
     1.0848178507360016,0.8255613193667017,-1.7732151221585841,-0.8691685073756066,
     -1.189633019470415,-1.6027031127308902,0.4501493206644149,1.145171851995698,
     0.23393610017914582,-0.30610844706507867,0.5704189910467243,-1.8242498402307763,
     2.186513201520681,-0.9156110884005038,0.4451931673708853,-0.3613857140239812,
     0.13465427203455368,-1.5389655809111054,1.1922584916585643,0.5463636690236342,
     0.6878930398520514,1.8626696234784734,0.5215605519528137,1.4220155949889306,
     -0.02351946064627601,4.3869674975962,-2.1635126257684134,-0.5286933237305184,
     0.5028229375054731,-0.30718623885624424,1.7147087487278039,-0.4052892735720401,
     -1.7049942158579017,1.858562855669563,0.34746141405857883,0.45066843367780385},
    {2303842.16637822,-491046.4231557071,101512.80149878692,2079799.6927647425,
     -2774493.9333673394,-2111397.7767549404,4535066.132894897,2222932.231019363,
     3042532.9485954354,4098975.7410331797,-1151274.4535288305,-2928821.701468148,
     -598300.7056743169,782884.29925124,-1458868.830168121,4665590.157650048,
     -5592092.841460298,2341711.090255416,-1138598.8991852808,924258.0666803225,
     -344383.55560996174,3935964.531227221,-3049247.6202376764,-1397346.40533614,
     -1759313.2944169114,-4763850.252638635,-1333911.4654887875,-3636860.3782628085,
     60151.93844509696,-11219840.57628978,5533267.971374635,1352153.807677608,
     -1285989.2853119103,785640.7937948735,-4385434.5412897905,1036543.1335609546,
     4360589.244366212,-4753347.033702616,-888646.1261177309,-1152602.1064352242},
    {-1468704983532.9436,313043289080.62854,-64714657949.908615,-1325877361919.4336,
     1768746629751.2776,1346021217343.8748,-2891115688452.2056,-1417124703176.937,
     -1939622153799.632,-2613107003120.436,733940263883.2931,1867130957224.8213,
     381418154863.3462,-499090644651.7849,930032427023.2623,-2974325071652.284,
     3564972785723.8657,-1492846514794.6406,725859567164.1365,-589216765193.1033,
     219545354201.29892,-2509186960445.118,1943902773301.2617,890811731577.9333,
     1121566503628.2263,3036966121164.494,850371803159.4227,2318507335545.0586,
     -38347007040.41527,7152675652678.077,-3527471787988.81,-862001340669.7601,
     819821296756.7878,-500847916626.2747,2795725184917.112,-660798768393.5481,
     -2779886247707.635,3030270293550.492,566514066479.5745,734786645839.7612},
};

}  // namespace extremal::detail
