#include "treeline/oracle.hpp"

#include <string>

#include "treeline/error.hpp"

namespace treeline {

namespace {

// Upper critical values of the chi-square distribution, df 1..300,
// precomputed offline so the test suites carry no statistics dependency.
constexpr int kMaxTabulatedDf = 300;

constexpr double kCritical05[kMaxTabulatedDf] = {
    3.841458821, 5.991464547, 7.814727903, 9.487729037, 11.07049769, 12.59158724,
    14.06714045, 15.50731306, 16.9189776, 18.30703805, 19.67513757, 21.02606982,
    22.36203249, 23.6847913, 24.99579014, 26.2962276, 27.58711164, 28.86929943,
    30.14352721, 31.41043284, 32.67057334, 33.92443847, 35.17246163, 36.4150285,
    37.65248413, 38.88513866, 40.11327207, 41.33713815, 42.5569678, 43.77297183,
    44.98534328, 46.19425952, 47.39988392, 48.60236737, 49.80184957, 50.99846017,
    52.19231973, 53.38354062, 54.57222776, 55.75847928, 56.94238715, 58.12403768,
    59.30351203, 60.48088658, 61.65623338, 62.82962041, 64.00111197, 65.1707689,
    66.33864886, 67.50480655, 68.66929391, 69.83216034, 70.99345283, 72.15321617,
    73.31149303, 74.46832416, 75.62374847, 76.77780316, 77.93052381, 79.08194449,
    80.23209785, 81.38101519, 82.52872654, 83.67526074, 84.8206455, 85.96490744,
    87.1080722, 88.25016442, 89.39120787, 90.53122543, 91.67023918, 92.80827038,
    93.9453396, 95.08146667, 96.21667075, 97.35097038, 98.48438346, 99.61692732,
    100.7486187, 101.879474, 103.0095087, 104.1387382, 105.2671773, 106.3948402,
    107.521741, 108.647893, 109.7733094, 110.8980028, 112.0219857, 113.1452701,
    114.2678677, 115.3897897, 116.5110473, 117.6316511, 118.7516118, 119.8709393,
    120.9896437, 122.1077346, 123.2252215, 124.3421134, 125.4584194, 126.5741482,
    127.6893083, 128.8039079, 129.9179553, 131.0314583, 132.1444245, 133.2568617,
    134.3687771, 135.4801779, 136.5910712, 137.7014639, 138.8113626, 139.9207739,
    141.0297043, 142.13816, 143.2461473, 144.353672, 145.4607402, 146.5673576,
    147.6735298, 148.7792623, 149.8845606, 150.98943, 152.0938757, 153.1979027,
    154.3015162, 155.4047209, 156.5075216, 157.6099231, 158.71193, 159.8135469,
    160.914778, 162.0156279, 163.1161008, 164.2162009, 165.3159322, 166.4152989,
    167.514305, 168.6129543, 169.7112506, 170.8091977, 171.9067993, 173.0040591,
    174.1009806, 175.1975673, 176.2938226, 177.38975, 178.4853527, 179.5806342,
    180.6755974, 181.7702457, 182.8645822, 183.9586098, 185.0523317, 186.1457508,
    187.2388699, 188.3316921, 189.42422, 190.5164565, 191.6084043, 192.7000662,
    193.7914446, 194.8825424, 195.973362, 197.0639059, 198.1541768, 199.2441769,
    200.3339088, 201.4233749, 202.5125774, 203.6015187, 204.6902011, 205.7786268,
    206.866798, 207.954717, 209.0423859, 210.1298067, 211.2169816, 212.3039127,
    213.390602, 214.4770515, 215.5632632, 216.649239, 217.7349809, 218.8204907,
    219.9057703, 220.9908216, 222.0756464, 223.1602465, 224.2446237, 225.3287798,
    226.4127164, 227.4964352, 228.579938, 229.6632264, 230.7463021, 231.8291667,
    232.9118218, 233.9942689, 235.0765096, 236.1585456, 237.2403782, 238.322009,
    239.4034395, 240.4846711, 241.5657054, 242.6465436, 243.7271874, 244.8076379,
    245.8878967, 246.9679651, 248.0478444, 249.127536, 250.2070412, 251.2863613,
    252.3654975, 253.4444512, 254.5232236, 255.601816, 256.6802295, 257.7584655,
    258.836525, 259.9144094, 260.9921196, 262.069657, 263.1470227, 264.2242178,
    265.3012434, 266.3781007, 267.4547907, 268.5313145, 269.6076732, 270.6838679,
    271.7598996, 272.8357694, 273.9114783, 274.9870272, 276.0624173, 277.1376495,
    278.2127249, 279.2876443, 280.3624087, 281.4370192, 282.5114766, 283.5857819,
    284.659936, 285.7339399, 286.8077944, 287.8815005, 288.955059, 290.0284709,
    291.1017369, 292.174858, 293.2478351, 294.3206689, 295.3933603, 296.4659102,
    297.5383193, 298.6105885, 299.6827186, 300.7547104, 301.8265646, 302.8982822,
    303.9698637, 305.0413101, 306.1126221, 307.1838004, 308.2548458, 309.325759,
    310.3965408, 311.4671919, 312.5377129, 313.6081047, 314.678368, 315.7485033,
    316.8185115, 317.8883933, 318.9581492, 320.02778, 321.0972863, 322.1666689,
    323.2359283, 324.3050653, 325.3740805, 326.4429744, 327.5117478, 328.5804013,
    329.6489355, 330.7173511, 331.7856486, 332.8538286, 333.9218918, 334.9898387,
    336.05767, 337.1253862, 338.192988, 339.2604758, 340.3278503, 341.3951121,
};

constexpr double kCritical01[kMaxTabulatedDf] = {
    6.634896601, 9.210340372, 11.34486673, 13.27670414, 15.08627247, 16.81189383,
    18.47530691, 20.09023503, 21.66599433, 23.20925116, 24.72497031, 26.21696731,
    27.68824961, 29.14123774, 30.57791417, 31.99992691, 33.40866361, 34.80530573,
    36.19086913, 37.56623479, 38.93217268, 40.28936044, 41.63839812, 42.97982014,
    44.3141049, 45.64168267, 46.96294212, 48.27823577, 49.58788447, 50.89218131,
    52.19139483, 53.48577184, 54.77553976, 56.06090875, 57.34207343, 58.6192145,
    59.89250005, 61.16208676, 62.42812102, 63.69073975, 64.95007134, 66.20623628,
    67.45934792, 68.70951297, 69.95683207, 71.20140025, 72.44330738, 73.68263852,
    74.91947431, 76.15389125, 77.38596202, 78.61575572, 79.84333812, 81.06877191,
    82.29211683, 83.51342993, 84.73276571, 85.95017625, 87.1657114, 88.3794189,
    89.59134449, 90.80153203, 92.01002361, 93.21685966, 94.42207901, 95.625719,
    96.82781556, 98.02840328, 99.22751547, 100.4251842, 101.6214405, 102.8163142,
    104.0098341, 105.202028, 106.3929229, 107.5825448, 108.7709187, 109.9580691,
    111.1440194, 112.3287925, 113.5124105, 114.6948947, 115.8762659, 117.0565442,
    118.2357493, 119.4138999, 120.5910145, 121.767111, 122.9422068, 124.1163187,
    125.2894631, 126.461656, 127.6329129, 128.8032489, 129.9726787, 131.1412167,
    132.3088767, 133.4756723, 134.6416169, 135.8067232, 136.9710038, 138.1344711,
    139.297137, 140.4590132, 141.620111, 142.7804416, 143.9400159, 145.0988444,
    146.2569375, 147.4143054, 148.5709579, 149.7269047, 150.8821552, 152.0367188,
    153.1906043, 154.3438208, 155.4963768, 156.6482808, 157.7995412, 158.9501659,
    160.100163, 161.2495402, 162.3983053, 163.5464655, 164.6940283, 165.8410009,
    166.9873901, 168.1332031, 169.2784464, 170.4231268, 171.5672506, 172.7108244,
    173.8538543, 174.9963465, 176.138307, 177.2797417, 178.4206565, 179.5610569,
    180.7009486, 181.8403371, 182.9792278, 184.117626, 185.2555368, 186.3929655,
    187.529917, 188.6663962, 189.802408, 190.9379572, 192.0730484, 193.2076864,
    194.3418755, 195.4756204, 196.6089252, 197.7417945, 198.8742323, 200.006243,
    201.1378305, 202.268999, 203.3997524, 204.5300946, 205.6600295, 206.7895609,
    207.9186925, 209.047428, 210.1757711, 211.3037252, 212.431294, 213.5584808,
    214.685289, 215.8117222, 216.9377834, 218.0634761, 219.1888034, 220.3137685,
    221.4383746, 222.5626246, 223.6865216, 224.8100687, 225.9332687, 227.0561246,
    228.1786393, 229.3008155, 230.4226561, 231.5441639, 232.6653414, 233.7861915,
    234.9067167, 236.0269196, 237.1468029, 238.266369, 239.3856206, 240.5045599,
    241.6231895, 242.7415118, 243.8595292, 244.977244, 246.0946585, 247.211775,
    248.3285957, 249.445123, 250.5613589, 251.6773058, 252.7929656, 253.9083406,
    255.0234328, 256.1382443, 257.2527772, 258.3670334, 259.481015, 260.5947239,
    261.7081621, 262.8213315, 263.934234, 265.0468715, 266.1592459, 267.2713589,
    268.3832124, 269.4948082, 270.6061481, 271.7172337, 272.828067, 273.9386494,
    275.0489829, 276.1590689, 277.2689093, 278.3785056, 279.4878594, 280.5969724,
    281.7058461, 282.8144821, 283.9228819, 285.0310471, 286.1389793, 287.2466798,
    288.3541502, 289.461392, 290.5684065, 291.6751954, 292.7817598, 293.8881014,
    294.9942214, 296.1001213, 297.2058024, 298.3112661, 299.4165136, 300.5215464,
    301.6263657, 302.7309729, 303.8353691, 304.9395557, 306.043534, 307.1473052,
    308.2508704, 309.3542311, 310.4573882, 311.5603431, 312.663097, 313.7656509,
    314.8680061, 315.9701637, 317.0721249, 318.1738908, 319.2754624, 320.376841,
    321.4780276, 322.5790233, 323.6798291, 324.7804462, 325.8808756, 326.9811183,
    328.0811754, 329.1810479, 330.2807368, 331.3802432, 332.479568, 333.5787122,
    334.6776768, 335.7764628, 336.8750711, 337.9735028, 339.0717586, 340.1698397,
    341.2677468, 342.365481, 343.4630431, 344.5604341, 345.6576549, 346.7547062,
    347.8515891, 348.9483044, 350.0448529, 351.1412356, 352.2374532, 353.3335067,
    354.4293968, 355.5251244, 356.6206903, 357.7160953, 358.8113403, 359.906426,
};

constexpr double kCritical001[kMaxTabulatedDf] = {
    10.82756617, 13.81551056, 16.2662362, 18.46682695, 20.51500565, 22.45774448,
    24.32188635, 26.12448156, 27.87716487, 29.58829845, 31.26413362, 32.90949041,
    34.52817897, 36.12327368, 37.69729822, 39.25235479, 40.79021671, 42.31239633,
    43.82019596, 45.31474662, 46.79703804, 48.26794229, 49.72823247, 51.17859778,
    52.61965578, 54.05196239, 55.47602021, 56.89228539, 58.30117349, 59.7030643,
    61.09830608, 62.48721906, 63.87009852, 65.24721746, 66.61882884, 67.98516763,
    69.3464525, 70.70288741, 72.05466295, 73.40195752, 74.7449384, 76.08376271,
    77.41857824, 78.74952423, 80.07673201, 81.40032566, 82.72042252, 84.03713372,
    85.35056461, 86.66081519, 87.96798048, 89.27215083, 90.57341231, 91.87184688,
    93.16753277, 94.46054464, 95.75095383, 97.03882857, 98.32423413, 99.60723307,
    100.8878853, 102.1662483, 103.4423773, 104.7163253, 105.9881431, 107.2578798,
    108.5255824, 109.7912965, 111.0550656, 112.3169319, 113.576936, 114.8351171,
    116.0915131, 117.3461606, 118.5990948, 119.8503499, 121.0999589, 122.3479538,
    123.5943655, 124.839224, 126.0825583, 127.3243966, 128.5647661, 129.8036932,
    131.0412037, 132.2773225, 133.5120738, 134.745481, 135.9775671, 137.2083541,
    138.4378638, 139.666117, 140.8931343, 142.1189354, 143.3435398, 144.5669662,
    145.7892331, 147.0103583, 148.2303592, 149.4492528, 150.6670557, 151.883784,
    153.0994535, 154.3140795, 155.5276772, 156.740261, 157.9518454, 159.1624443,
    160.3720713, 161.5807398, 162.7884629, 163.9952532, 165.2011232, 166.4060851,
    167.6101509, 168.8133321, 170.0156402, 171.2170864, 172.4176816, 173.6174365,
    174.8163615, 176.0144669, 177.2117628, 178.4082591, 179.6039653, 180.7988909,
    181.9930452, 183.1864373, 184.3790761, 185.5709704, 186.7621286, 187.9525593,
    189.1422706, 190.3312707, 191.5195675, 192.7071687, 193.8940821, 195.0803152,
    196.2658753, 197.4507697, 198.6350055, 199.8185897, 201.0015291, 202.1838305,
    203.3655006, 204.5465458, 205.7269726, 206.9067873, 208.085996, 209.2646048,
    210.4426197, 211.6200467, 212.7968914, 213.9731596, 215.148857, 216.3239889,
    217.4985608, 218.6725782, 219.8460461, 221.0189699, 222.1913545, 223.3632051,
    224.5345265, 225.7053236, 226.8756011, 228.0453639, 229.2146165, 230.3833635,
    231.5516094, 232.7193587, 233.8866157, 235.0533847, 236.21967, 237.3854758,
    238.5508062, 239.7156653, 240.880057, 242.0439854, 243.2074542, 244.3704675,
    245.5330289, 246.6951422, 247.856811, 249.0180391, 250.17883, 251.3391873,
    252.4991143, 253.6586146, 254.8176917, 255.9763487, 257.1345891, 258.292416,
    259.4498328, 260.6068426, 261.7634486, 262.9196538, 264.0754613, 265.2308742,
    266.3858954, 267.5405278, 268.6947744, 269.8486381, 271.0021217, 272.1552279,
    273.3079597, 274.4603196, 275.6123104, 276.7639348, 277.9151954, 279.0660949,
    280.2166357, 281.3668204, 282.5166516, 283.6661318, 284.8152633, 285.9640487,
    287.1124903, 288.2605905, 289.4083516, 290.555776, 291.7028659, 292.8496237,
    293.9960515, 295.1421515, 296.2879261, 297.4333773, 298.5785072, 299.7233181,
    300.8678119, 302.0119908, 303.1558568, 304.299412, 305.4426583, 306.5855978,
    307.7282323, 308.8705639, 310.0125944, 311.1543259, 312.29576, 313.4368988,
    314.577744, 315.7182976, 316.8585612, 317.9985366, 319.1382257, 320.2776302,
    321.4167519, 322.5555923, 323.6941533, 324.8324366, 325.9704437, 327.1081763,
    328.2456361, 329.3828247, 330.5197436, 331.6563945, 332.792779, 333.9288985,
    335.0647546, 336.2003489, 337.3356829, 338.4707579, 339.6055757, 340.7401374,
    341.8744448, 343.0084991, 344.1423018, 345.2758544, 346.4091581, 347.5422145,
    348.6750248, 349.8075905, 350.9399129, 352.0719932, 353.2038329, 354.3354333,
    355.4667956, 356.5979211, 357.7288112, 358.859467, 359.9898899, 361.120081,
    362.2500417, 363.379773, 364.5092763, 365.6385527, 366.7676035, 367.8964297,
    369.0250326, 370.1534133, 371.281573, 372.4095128, 373.5372339, 374.6647373,
    375.7920241, 376.9190955, 378.0459526, 379.1725964, 380.299028, 381.4252485,
};

}  // namespace

double chi_square_critical_value(int degrees_of_freedom, double alpha) {
    if (degrees_of_freedom < 1 || degrees_of_freedom > kMaxTabulatedDf)
        fail(ErrorKind::invalid_argument,
             "degrees of freedom outside tabulated range 1.." +
                 std::to_string(kMaxTabulatedDf));
    if (alpha == 0.05) return kCritical05[degrees_of_freedom - 1];
    if (alpha == 0.01) return kCritical01[degrees_of_freedom - 1];
    if (alpha == 0.001) return kCritical001[degrees_of_freedom - 1];
    fail(ErrorKind::invalid_argument, "alpha must be 0.05, 0.01, or 0.001");
}

}  // namespace treeline
