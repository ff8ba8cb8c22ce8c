//! Frozen high-precision reference values. Each number was produced by two
//! independent routes (150+ digit series summation cross-checked against
//! Talbot inverse-Laplace inversion, closed forms, or exact beta-gamma
//! integrals) that agreed to well beyond f64 precision before freezing.

// reference data legitimately carries full-precision digits, and some
// frozen values coincide with named mathematical constants
#![allow(clippy::excessive_precision, clippy::approx_constant)]

/// (alpha, beta, x, pdf, cdf) at delta = 1
pub const ML_REF: [(f64, f64, f64, f64, f64); 63] = [
    (0.3, 0.5, 0.0098431332023036966, 5.70659610135002005, 0.476051052754175451),
    (0.3, 0.5, 1.0, 0.0517379696414437022, 0.740444774633128575),
    (0.3, 0.5, 21.2063876296477076, 0.00153510871576355718, 0.87021419847439817),
    (0.3, 0.5, 101.593667325964766, 0.000227849924760728984, 0.913629300191009991),
    (0.3, 0.5, 1024.0, 0.000012625354230616908, 0.954418936900187152),
    (0.3, 0.5, 21715.3409327592526, 2.54580463599069234e-7, 0.981158689570130846),
    (0.3, 0.5, 460503.937330048326, 4.93116428680475317e-9, 0.99236352171087108),
    (0.3, 1.0, 0.0098431332023036966, 5.36965114651652134, 0.221925453598481929),
    (0.3, 1.0, 1.0, 0.077316799030089676, 0.543405591670309331),
    (0.3, 1.0, 21.2063876296477076, 0.00270901323903372811, 0.755016876205213057),
    (0.3, 1.0, 101.593667325964766, 0.000421510293414509393, 0.833498255684483352),
    (0.3, 1.0, 1024.0, 0.0000243030579994062355, 0.910506904181379277),
    (0.3, 1.0, 21715.3409327592526, 5.01603819835076852e-7, 0.962593773786115547),
    (0.3, 1.0, 460503.937330048326, 9.80423704880655834e-9, 0.984771798498185305),
    (0.3, 2.0, 0.0098431332023036966, 2.24642842202856916, 0.0457448153149323199),
    (0.3, 2.0, 1.0, 0.0838590815113270867, 0.285682928236677078),
    (0.3, 2.0, 21.2063876296477076, 0.00417117537408813385, 0.56352226006922399),
    (0.3, 2.0, 101.593667325964766, 0.000717111489708280521, 0.690755667272405137),
    (0.3, 2.0, 1024.0, 0.000044942719516359661, 0.82755246621007266),
    (0.3, 2.0, 21715.3409327592526, 9.73310612456192649e-7, 0.926285447249805408),
    (0.3, 2.0, 460503.937330048326, 1.93770091161523148e-8, 0.969722165953210127),
    (0.5, 0.5, 0.0625, 1.56133430746437866, 0.492637690946919024),
    (0.5, 0.5, 1.0, 0.086968857385326083, 0.766038990760862128),
    (0.5, 0.5, 6.25, 0.00797096823182005817, 0.891988003617451061),
    (0.5, 0.5, 16.0, 0.00208823130493515014, 0.930763444116292009),
    (0.5, 0.5, 64.0, 0.000271566488135935823, 0.964907250998438878),
    (0.5, 0.5, 400.0, 0.0000175898038907969339, 0.985906247369448223),
    (0.5, 0.5, 2500.0, 1.12795635773586365e-6, 0.994358809068560686),
    (0.5, 1.0, 0.0625, 1.4864117864600284, 0.229653452269003256),
    (0.5, 1.0, 1.0, 0.136606007391949283, 0.572416423844192996),
    (0.5, 1.0, 6.25, 0.0148694693579589341, 0.789193635938856419),
    (0.5, 1.0, 16.0, 0.00404793826187768185, 0.86300054237493861),
    (0.5, 1.0, 64.0, 0.000538531742588608146, 0.930014833799119072),
    (0.5, 1.0, 400.0, 0.0000351304363364950288, 0.971825651258948681),
    (0.5, 1.0, 2500.0, 2.25540563135323878e-6, 0.988718463734676227),
    (0.5, 2.0, 0.0625, 0.584545074423493193, 0.0438519789614997056),
    (0.5, 2.0, 1.0, 0.154371561371908439, 0.299204409060294431),
    (0.5, 2.0, 6.25, 0.024937997086656904, 0.603325268964369743),
    (0.5, 2.0, 16.0, 0.00746543324497557077, 0.733466517994852791),
    (0.5, 2.0, 64.0, 0.00105310314953908507, 0.86108277074777723),
    (0.5, 2.0, 400.0, 0.0000699996718552963148, 0.943721302189752658),
    (0.5, 2.0, 2500.0, 4.50810855757861129e-6, 0.977441435577910034),
    (0.7, 0.5, 0.138011189209226542, 1.03783761345800693, 0.506505880192243309),
    (0.7, 0.5, 1.0, 0.126524438659926754, 0.794716021220401705),
    (0.7, 0.5, 3.70242036993146703, 0.016924418481187378, 0.918991232400143735),
    (0.7, 0.5, 7.24578931411125337, 0.00515883354521395112, 0.952003003571933894),
    (0.7, 0.5, 19.5042184672716071, 0.000864970411818840289, 0.977500946980244459),
    (0.7, 0.5, 72.2128157528198943, 0.0000859813113254025044, 0.991387967925734409),
    (0.7, 0.5, 267.362200013348303, 8.96467291534854256e-6, 0.996616739413201109),
    (0.7, 1.0, 0.138011189209226542, 0.978330235997073009, 0.231176489621519128),
    (0.7, 1.0, 1.0, 0.210393346389023707, 0.600388021884400616),
    (0.7, 1.0, 3.70242036993146703, 0.0347117675453197724, 0.831368713323804259),
    (0.7, 1.0, 7.24578931411125337, 0.0108878317791336765, 0.900239745109485381),
    (0.7, 1.0, 19.5042184672716071, 0.0018051748755728488, 0.95393000761463762),
    (0.7, 1.0, 72.2128157528198943, 0.000175314378593519777, 0.982604301708396023),
    (0.7, 1.0, 267.362200013348303, 0.0000180721591267564009, 0.993206334329616907),
    (0.7, 2.0, 0.138011189209226542, 0.337185246642247132, 0.038290033465377273),
    (0.7, 2.0, 1.0, 0.239783073371044315, 0.299826098471509605),
    (0.7, 2.0, 3.70242036993146703, 0.0663794484018624805, 0.647772205843635798),
    (0.7, 2.0, 7.24578931411125337, 0.0231996525905440122, 0.787538409167931511),
    (0.7, 2.0, 19.5042184672716071, 0.00389698629552474473, 0.903632114550633787),
    (0.7, 2.0, 72.2128157528198943, 0.000364098060305961032, 0.964518666108118943),
    (0.7, 2.0, 267.362200013348303, 0.0000367180902247051161, 0.986303745439444189),
];

/// (alpha, beta, delta, x, pdf, cdf)
pub const ML_REF_DELTA: [(f64, f64, f64, f64, f64, f64); 3] = [
    (0.5, 2.0, 0.5, 3.0, 0.0438165194808042188, 0.697372191862716221),
    (0.3, 0.5, 2.0, 0.7, 0.0844267226199007403, 0.589657238437131347),
    (0.7, 1.0, 2.0, 5.0, 0.0364913868151323895, 0.723508478650953906),
];

/// (alpha, u, pdf, cdf)
pub const LEVY_REF: [(f64, f64, f64, f64); 39] = [
    (0.3, 0.05, 1.61499514569733014, 0.102557366465043193),
    (0.3, 0.1, 1.01237050888959655, 0.165979350430799112),
    (0.3, 0.3, 0.395716187237327249, 0.28861876720905998),
    (0.3, 0.7, 0.170658328970735051, 0.390212196438381546),
    (0.3, 1.0, 0.117157002565916154, 0.432448741006304975),
    (0.3, 1.3, 0.0882314075199838116, 0.462877031416809921),
    (0.3, 1.5, 0.0754211584079128545, 0.479180325585444062),
    (0.3, 2.0, 0.0547832422631214908, 0.511225608541735123),
    (0.3, 3.0, 0.0346037009840605616, 0.554508642408030122),
    (0.3, 5.0, 0.0191543548372937654, 0.605512019662010702),
    (0.3, 10.0, 0.00842818508921092444, 0.667927985705289159),
    (0.3, 100.0, 0.000498005983019927216, 0.820407171769513954),
    (0.3, 10000.0, 1.40480319376506823e-6, 0.952284977269842149),
    (0.5, 0.05, 0.170007332050406836, 0.00156540225800254968),
    (0.5, 0.1, 0.732249128096324356, 0.0253473186774682639),
    (0.5, 0.3, 0.746107005296797343, 0.196705602458946889),
    (0.5, 0.7, 0.337010037327269833, 0.398024719506937824),
    (0.5, 1.0, 0.219695644733861199, 0.479500122186953462),
    (0.5, 1.3, 0.157022493610211642, 0.535143452397750554),
    (0.5, 1.5, 0.129979770481827421, 0.563702861650773029),
    (0.5, 2.0, 0.0880163316910748694, 0.617075077451973793),
    (0.5, 3.0, 0.0499484457833487671, 0.683091398309608703),
    (0.5, 5.0, 0.0240007789686027196, 0.751829634045849282),
    (0.5, 10.0, 0.00870036967386292986, 0.823063273758121476),
    (0.5, 100.0, 0.000281390435606504797, 0.943628022202983376),
    (0.5, 10000.0, 2.82087739492237684e-7, 0.99435815117996845),
    (0.7, 0.05, 7.52552805671315391e-60, 1.1339412642667872e-63),
    (0.7, 0.1, 3.62173660713886509e-11, 5.42628453371363684e-14),
    (0.7, 0.3, 0.633115180649299694, 0.0318958387249520478),
    (0.7, 0.7, 0.681893312369775157, 0.381913937305961128),
    (0.7, 1.0, 0.38739501014659249, 0.53718723332616039),
    (0.7, 1.3, 0.24179024177125866, 0.629121820892237621),
    (0.7, 1.5, 0.185308903065779126, 0.671461845996906525),
    (0.7, 2.0, 0.107688344874337133, 0.742079377565220334),
    (0.7, 3.0, 0.0500009040202223669, 0.815329961584683326),
    (0.7, 5.0, 0.0192602707240668716, 0.877135620304671299),
    (0.7, 10.0, 0.0054390512981571771, 0.927844546308532356),
    (0.7, 100.0, 0.0000961551854496350531, 0.98647846054819724),
    (0.7, 10000.0, 3.71323058555847234e-8, 0.999469875972973493),
];

/// (s, alpha, value)
pub const LEVY_MELLIN_REF: [(f64, f64, f64); 5] = [
    (0.5, 0.5, 1.12837916709551257),
    (0.25, 0.3, 3.61602271158019286),
    (1.2, 0.7, 1.09599734524084723),
    (0.9, 0.3, 0.938643810310058269),
    (1.4, 0.5, 3.082774380311622),
];