// Frozen reference values for the Cantor measure (1/3, 1/3, 1/2, 1/2) and
// the other benchmark parameter sets. Eigenvalues are given as decimal
// strings with all published digits.
#pragma once

#include <array>
#include <string_view>

namespace mgl::reference {

// p_{2n+1}, n = 0..9.
inline constexpr std::array<std::string_view, 10> cantor_p_odd = {
    "1",
    "1/5",
    "27/2800",
    "6383/31906000",
    "928046087/427065638720000",
    "18312146532699/1290321173531252800000",
    "36205626974761334065053/595390835517679574442022016000000",
    "4976934962986304441117658183/27444983400881701904144720110742041600000",
    "9554109968352546557662907330504773561465623/24293779244421488801231482393897413175652507508121600000000",
    "146991787616583137720984325054111289057094244281881523497/"
    "228839658236344563453452927437095017291959177590164358527465655296000000000"};

// q_{2n+1}, n = 0..9.
inline constexpr std::array<std::string_view, 10> cantor_q_odd = {
    "1",
    "1/8",
    "21/4240",
    "33253/383465600",
    "76118969/91537621184000",
    "20165083798890939/4103397246999022891520000",
    "129726498389261896497/6714982210971717632658867200000",
    "2413673468793966201825434809368471/45210174990342427454327995801851920608256000000",
    "1194381655935980000421990244022269580561517/11036319046998816108771342849627021590229476137440051200000",
    "126866175828333349955887526100988154691317901447037378112773/"
    "762232235417372510271600164875680211782266161937386279477493896522956800000000"};

// p_{2n} = q_{2n}, n = 0..9.
inline constexpr std::array<std::string_view, 10> cantor_even = {
    "1",
    "1/2",
    "3/80",
    "311/296800",
    "4716349/329780416000",
    "186511983201/1659577072065920000",
    "7179455540679158013/12761565438166961192627200000",
    "159906376968352543502900259/83334473684067539316352053491456000000",
    "60996703846644308894938372985688873/13022158544999621792336779426151940728460083200000",
    "55173436475334110717731416972957128310218371151677/"
    "6487868455643720781486892657131701453895648546905230058700800000000"};

inline constexpr std::array<std::string_view, 32> cantor_neumann = {
    "7.097431098141122",    "42.584586588846733",   "61.344203922701662",   "255.507519533080403",
    "272.983570819147205",  "368.065223536209975",  "383.552883127693176",  "1533.045117198482423",
    "1548.055824221295240", "1637.901424914883235", "1662.627433423243043", "2208.391341217259852",
    "2220.769449967796401", "2301.317298766159059", "2312.582120727584404", "9198.270703190894542",
    "9211.739397756251229", "9288.334945327771442", "9316.347022410075024", "9827.408549489299413",
    "9847.990083199668501", "9975.764600539458261", "9994.037352597068208", "13250.348047303559112",
    "13260.716598784444965", "13324.616699806778407", "13342.227668891503102", "13807.903792596954355",
    "13816.727250920634538", "13875.492724365506427", "13883.672380356518424", "55189.624219145367256"};

// Degree column published with the first Neumann values (m = 1, 2, 8, 16, 32).
inline constexpr std::array<std::pair<int, int>, 5> cantor_neumann_degree = {
    std::pair{1, 12}, std::pair{2, 19}, std::pair{8, 47}, std::pair{16, 85}, std::pair{32, 160}};

inline constexpr std::array<std::string_view, 32> cantor_dirichlet = {
    "14.435240512053874",   "35.260238024277225",   "140.781053384556059",  "151.290616055019631",
    "326.057328357753770",  "353.416920767557756",  "876.274459602073755",  "876.505318509660313",
    "1581.177024287145662", "1619.400729158424238", "2029.613563451019039", "2033.852813057761437",
    "2268.791633644560767", "2289.604069442469130", "5258.339396921217309", "5258.339403172623308",
    "9233.867938008663779", "9271.628792721274161", "9589.268396141598781", "9598.240412584912727",
    "9923.464452585818608", "9957.065202153829857", "12190.285583570241470", "12190.292419099534112",
    "13284.126824873170732", "13311.274484046062950", "13668.536903946319748", "13671.268166872611762",
    "13851.839512664376419", "13866.937824133173771", "31550.0364002815218746422325788",
    "31550.0364002815218748968965410"};

// Cantor L2, sup and normalized sup norms of f_{N,m}, m = 1..8.
struct NormRow {
  int m;
  double l2, sup, normalized;
};
inline constexpr std::array<NormRow, 8> cantor_neumann_norms = {{{1, 0.801, 1.000, 1.248},
                                                                 {2, 0.801, 1.000, 1.248},
                                                                 {3, 0.966, 1.261, 1.306},
                                                                 {4, 0.801, 1.000, 1.248},
                                                                 {5, 0.746, 1.049, 1.405},
                                                                 {6, 0.966, 1.261, 1.306},
                                                                 {7, 1.145, 1.604, 1.401},
                                                                 {8, 0.801, 1.000, 1.248}}};
inline constexpr std::array<NormRow, 8> cantor_dirichlet_norms = {{{1, 0.627, 0.920, 1.469},
                                                                   {2, 0.711, 0.985, 1.387},
                                                                   {3, 0.446, 0.790, 1.770},
                                                                   {4, 0.457, 0.793, 1.734},
                                                                   {5, 1.115, 1.628, 1.461},
                                                                   {6, 1.273, 2.105, 1.654},
                                                                   {7, 0.262, 0.646, 2.469},
                                                                   {8, 0.262, 0.646, 2.468}}};

// Parameters (1/3, 1/4, 3^-d, 4^-d) with the similarity dimension d.
inline constexpr std::array<std::string_view, 8> ex_dimension_neumann = {
    "6.567037965687942",   "41.632795946820830",  "66.822767372091789",  "233.355013145153884",
    "365.584215801794021", "389.945618826510339", "582.138208794906725", "1295.888937033626505"};
inline constexpr std::array<std::string_view, 8> ex_dimension_dirichlet = {
    "16.107849410419070",  "35.907601066462638",  "128.330447556120622", "236.463676343561213",
    "373.701929431216995", "423.638157028808414", "713.786986198043209", "2013.164883016581104"};
inline constexpr std::string_view ex_dimension_value = "0.56049886522386387883902233";

// Parameters (1/3, 1/4, 3/7, 4/7).
inline constexpr std::array<std::string_view, 16> ex_seventh_neumann = {
    "6.752284245618646",    "47.265989719330522",   "62.066872795561511",   "330.861928035313659",
    "345.194670941772007",  "434.468109568930577",  "446.407999438501248",  "2316.033496247195616",
    "2332.825185220436900", "2416.362696592404055", "2434.484694248270572", "3041.276766982514042",
    "3051.736543145083444", "3124.855996069508739", "3133.914016082441210", "16212.234473730369315"};
inline constexpr std::array<std::string_view, 16> ex_seventh_dirichlet = {
    "16.452512161464721",   "36.904245287406090",   "154.577520453343494",  "212.376524344704458",
    "395.526819249411977",  "417.532700806716224",  "1083.253271255975735", "1485.470110503836517",
    "2360.481274606702758", "2397.801276276128236", "2830.491432008378221", "2850.987710468049166",
    "3093.525406096403347", "3111.593713450879200", "7582.772906434721944", "10398.290767742394136"};

// Parameters (0.6, 0.4, 0.4, 0.6); Neumann and Dirichlet values coincide.
inline constexpr std::array<std::string_view, 9> ex_coincident_a = {
    "11.113238313123921",  "46.305159638016340",  "97.600761284513435",
    "192.938165158401419", "286.725410299828738", "406.669838685472647",
    "517.717830447592425", "803.909021493339246", "1012.173153820335730"};

// Parameters (0.9, 0.1, 0.1, 0.9); Neumann and Dirichlet values coincide.
inline constexpr std::array<std::string_view, 8> ex_coincident_b = {
    "111.021168159382246",   "1233.568535104247184",  "1403.454381590697316",
    "13706.317056713857601", "14892.987448715203651", "15593.937573229970183",
    "15976.123552769762561", "152292.411741265084466"};

}  // namespace mgl::reference
