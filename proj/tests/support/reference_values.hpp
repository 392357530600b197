#pragma once

// Frozen extended-precision reference values (regenerate with gen_reference).

namespace prab::ref {

inline constexpr double ml3_a07_b13_t25_z04 = 2.750279314960836;
inline constexpr double ml3_a05_b08_t06_zm2 = 0.35435066435954882;
inline constexpr double ml3_a12_b21_tm15_z13 = 0.28539657831403048;
inline constexpr double mv2_a05_a10_b08_z02_zm01 = 0.99097737140840181;
inline constexpr double kmom_a05_b07_t12_w03_0_01_d0 = 0.24184334518098519;
inline constexpr double kmom_a05_b07_t12_w03_0_01_d1 = 0.010270220813986909;
inline constexpr double kmom_a12_b18_t04_wm07_03_05_d1 = 0.040066153545287107;
inline constexpr double cpp_j1_a05_b03_t2_w04_t08 = 0.45676318120040482;
inline constexpr double cpp_j2_a07_b14_t06_wm03_t05 = 0.7997405024473464;
inline constexpr double cpp_j2_a10_b04_t15_w02_t07 = 0.36369066529015359;
inline constexpr double mvk_n1_s025 = 0.25613924666884635;
inline constexpr double mvk_n0_s09 = 0.31810037471513175;
inline constexpr double relax06_t05 = 0.53293368267506025;
inline constexpr double relax06_t1 = 0.4133273409431063;

struct Mv2Case {
    double a1, a2, beta, z1, z2, value;
};

inline constexpr Mv2Case mv2_cases[] = {
    {1.8063273213649094, 1.7911613982388492, 2.2301536128775732, -0.86088169115021329, 0.25471883098354486, 0.80072338572647406},
    {1.6683879479690664, 0.99195063269157935, 1.1282939296995536, -0.74811743928007179, 0.067031047289944468, 0.70901854994479407},
    {0.62891991965791905, 1.1839171992870723, 2.0245280669970835, -0.32783683832057064, 0.56797672193830473, 0.99900830419799491},
    {1.7552445587948444, 1.9612522879558387, 1.1162226992546183, -0.30715435257220636, -0.59132765096060147, 0.64931690087363503},
    {1.0570068418798853, 0.6709947716459026, 1.1705172053996575, 0.64598912050769131, -0.70441594144836328, 0.93456161151632089},
    {1.9533265383676435, 1.8315616214508976, 1.0952483818097856, 0.4532934370512709, -0.31603460086965796, 1.0969485407415549},
    {1.0521369432458851, 1.6061719522011315, 1.4587834440922034, -0.52919429535209761, -0.8570925000658205, 0.54349448693156899},
    {1.0408205792224303, 1.9290519032816054, 1.4054268052419752, 0.12632069067831986, 0.26705931317423093, 1.3364008198862398},
    {0.88265187031861014, 1.8099743331661271, 2.4021780868058569, 0.025763105274573483, -0.65102041279503275, 0.73329589452146204},
    {1.5593250758658308, 1.769290126596307, 2.1899310591475114, -0.97122198138404925, 0.99090079980588652, 0.86819898384512229},
    {1.8071797061765569, 1.6771250339692254, 1.7387556122562935, -0.28241247895177268, 0.32443939736422167, 1.1175940693641835},
    {1.0776727935635679, 0.78930032291675345, 1.4610785690496364, 0.042154955949274653, 0.49640960506177767, 1.7688247071676697},
    {1.6085417982509678, 1.7426561251954853, 0.59042221448526211, 0.44670214717579149, 0.21964427288210597, 1.3418257268080847},
    {1.9498917703016194, 1.0024179435392857, 0.85605859876693469, -0.16836375167003026, 0.25984317193179884, 1.1010826947373045},
    {1.8204783102885216, 0.68116649332538348, 0.85351207756397285, 0.16219482765132298, -0.09250494983979507, 0.90401396696191871},
    {0.9931067543507619, 0.85828982853013835, 1.8986456160634384, -0.93026892220631663, -0.59434975528061285, 0.50584438791786102},
    {1.8261968214167394, 1.0490483113399631, 1.6765862030571916, -0.67784201711997405, -0.31836661188210735, 0.76197356249451276},
    {1.6177584400899936, 1.381950834281203, 2.1109661506302175, -0.062998501136975471, 0.32766272588074541, 1.039396091478074},
    {0.61386107394365808, 0.98012732211952214, 1.5923029581117893, 0.8045878945230911, -0.26667025614473505, 1.9943116050504444},
    {1.5911645714925098, 1.7470741136546191, 1.8163345534272199, 0.92883533808155194, 0.76323091882391303, 1.700125667357882},
    {1.4080724819159962, 1.6127601279526158, 0.79225891459243414, 0.99515959530754117, 0.89449229332479185, 3.4522394640480085},
    {1.9643028571266257, 1.5603538013930951, 1.4190012068668341, -0.26169719955262738, -0.065178289857363958, 1.009107439506753},
    {0.6180264403940352, 1.4120056064885855, 1.7716343880088761, 0.030079631899354364, -0.37615490250858041, 0.95484514233630713},
    {0.70503156382151344, 0.80224855858047062, 2.1928186601039719, -0.21806863381976216, 0.088741962260043161, 0.84101956292761626},
    {0.95257980463296699, 1.1557954096798224, 2.461480925221184, -0.65757337034146879, -0.84500808912409253, 0.46397522413907782},
    {1.0675447892178911, 1.8516479161691715, 0.84968723625982645, 0.71403521436794293, 0.1884159697473522, 2.1661651824037502},
    {1.8035775010400918, 0.86309391790115508, 1.8770175356485845, -0.45566443312490368, 0.5235251814817603, 1.3103828926172221},
    {0.79179631512207249, 1.7726845518069911, 2.0928254170482155, 0.67092306564614956, 0.47944036129554179, 1.6382624049182},
    {0.88021307391198755, 0.72209975339425791, 1.0805849404987133, 0.90327541606164119, -0.47686581073735046, 1.529855798003509},
    {1.6366018662259787, 1.2525314527848748, 1.8536965720459337, 0.36819633530298734, 0.26958359192659853, 1.3161500336699785},
    {0.87220470438294817, 0.87612699791075155, 2.0333413914711747, 0.55947888290103243, -0.08240373215442387, 1.3041319624000975},
    {1.7087879012957781, 1.6485617937081103, 2.372125676016597, 0.63114849150840313, 0.21899093679227577, 0.95959197200769886},
    {1.2055036248688786, 0.75134045819926498, 1.8161825615438676, 0.3854980819214513, 0.7867047533543714, 2.4179171603974452},
    {1.0555361420296445, 0.87202698053828387, 0.51609238392876022, 0.6985487084065809, 0.52414770923554665, 3.9967056525047733},
    {1.805858463893689, 1.8883679499871131, 0.7371669744906596, 0.85445788944953738, -0.71664939226714308, 0.94107587035075391},
    {1.2230232444630755, 0.60333067492904868, 2.47307671822161, -0.21351976479622492, 0.65278653904857298, 1.1214670810773772},
    {1.1361319363939009, 1.3645353941102298, 0.85276945825343931, 0.4981535950581466, -0.93362611909231674, 0.58350707893246567},
    {1.0331484128870088, 1.5153358465621529, 1.3978835314002485, 0.13559078220570364, 0.22266406687446372, 1.3768127129484244},
    {0.68849752468233449, 0.92322531576320388, 2.1466966895302915, 0.28128037739334921, 0.3091612954456131, 1.3392242004247956},
    {1.1585824373804843, 0.87827507054654474, 0.92892156970009898, 0.0045923524967079743, -0.25257702780194635, 0.72605585671312822},
    {1.4439779585156103, 0.93831630557389234, 2.1234198734476539, -0.70278703673141174, -0.13106603546438345, 0.72174961386168635},
    {1.2985172572613315, 1.2486193133621089, 0.77427935674330828, 0.25241216073624839, 0.70853078351866716, 2.2092051488417819},
    {1.9388935808833647, 0.74903046182208333, 2.2840777781569721, 0.56347278943760415, 0.34710725766598949, 1.1569414619862397},
    {1.8574428580702924, 1.348731817210878, 2.0009725650602537, 0.40556372329251378, 0.23705719733944219, 1.1761849083750811},
    {1.7034008275764192, 1.9127463778014038, 2.2371223118774783, 0.41247455249385068, -0.07096728418339493, 0.95539420702601907},
    {1.7128294150957504, 1.1945921283896914, 1.2299674725333969, 0.93713518385522843, -0.49452618453124952, 1.1954187391147526},
    {0.77995997500261116, 0.91040066378944795, 0.85249611336736797, 0.76535303290089396, -0.028871701709957898, 2.39593629221367},
    {0.79824314025512144, 1.1643526146353746, 1.6272365682903214, -0.64482848120127301, -0.40997910129225257, 0.608716516634219},
    {1.1341918262371373, 1.9330650350338803, 1.9607296251664323, 0.458982716026199, -0.23576943987063548, 1.2009592536477196},
    {1.2795110711534032, 1.94265290131333, 0.66859620341661341, 0.37434526397348833, 0.81159219840631014, 1.9376535884073969},
};

}  // namespace prab::ref
