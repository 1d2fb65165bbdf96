//! Frozen high-precision reference values for J0, Y0, J1, Y1.
//! Each entry is (t, j0, y0, j1, y1), correctly rounded to f64.

pub const BESSEL_TABLE: &[(f64, f64, f64, f64, f64)] = &[
    (0.01, 0.9999750001562495, -3.005455637083646, 0.004999937500260416, -63.67859628206066),
    (0.010592537251772886, 0.999971949735349, -2.968798774963726, 0.005296194344844498, -60.118191682698395),
    (0.011220184543019636, 0.9999685271123439, -2.9321408080813423, 0.005610003988376372, -56.75703256504727),
    (0.011885022274370183, 0.999964686873143, -2.8954816169445445, 0.005942406212551502, -53.583976700250886),
    (0.012589254117941675, 0.999960378062669, -2.85882106934977, 0.006294502355899659, -50.588505268072986),
    (0.01333521432163324, 0.9999555435088525, -2.82215901905894, 0.00666745895105818, -47.76068798651515),
    (0.01412537544622754, 0.9999501190641648, -2.7854953043430024, 0.0070625115756449905, -45.09115019192217),
    (0.014962356560944336, 0.999944032754636, -2.7488297463790494, 0.007480968929025535, -42.57104176044234),
    (0.015848931924611134, 0.9999372038250762, -2.7121621474869544, 0.007924217147928124, -40.19200776781083),
    (0.016788040181225608, 0.9999295416678465, -2.675492289190252, 0.008393724374548646, -37.946160790185004),
    (0.01778279410038923, 0.999920944620982, -2.63881993008464, 0.008891045591497277, -35.826054754199845),
    (0.018836490894898, 0.9999112986197431, -2.6021448034960413, 0.009417827738675926, -33.824660249543456),
    (0.0199526231496888, 0.9999004756837299, -2.5654666149086256, 0.009975815127932728, -31.93534122220039),
    (0.021134890398366465, 0.9998883322195209, -2.5287850391415687, 0.010566855172117131, -30.15183297108451),
    (0.0223872113856834, 0.9998747071163611, -2.4920997172515316, 0.011192904445951914, -28.468221375101102),
    (0.023713737056616554, 0.999859419609684, -2.4554102531360362, 0.011856035096941442, -26.878923281755693),
    (0.025118864315095794, 0.9998422668841954, -2.4187162098108903, 0.012558441625343933, -25.37866799227351),
    (0.0266072505979881, 0.9998230213848005, -2.3820171053327788, 0.013302448053039727, -23.962479781826868),
    (0.028183829312644536, 0.99980142779981, -2.3453124083359276, 0.014090515501919256, -22.625661396895726),
    (0.029853826189179603, 0.999777199676538, -2.3086015331494676, 0.014925250203180805, -21.36377847502262),
    (0.03162277660168379, 0.999750015624566, -2.271883834459773, 0.015809411959653553, -20.172644835278266),
    (0.03349654391578276, 0.999719515056521, -2.235158601479568, 0.016745923083928808, -19.04830859063603),
    (0.03548133892335755, 0.9996852934101416, -2.198425051583115, 0.017737877835667045, -17.987039036175105),
    (0.037583740428844416, 0.9996468967885948, -2.1616823233642477, 0.018788552381924967, -16.985314269599307),
    (0.039810717055349734, 0.9996038159483823, -2.124929469071458, 0.019901415304679933, -16.039809502981658),
    (0.042169650342858224, 0.9995554795556381, -2.0881654463717556, 0.021080138679879123, -15.14738602693157),
    (0.0446683592150963, 0.9995012466220556, -2.0513891093925696, 0.02232860975225916, -14.305080790538401),
    (0.04731512589614805, 0.9994403980209935, -2.0145991989887158, 0.0236509432298081, -13.510096562480873),
    (0.05011872336272722, 0.999372126972329, -1.9777943321793714, 0.02505149422100661, -12.759792640611662),
    (0.053088444423098846, 0.9992955283712543, -1.9409729906982773, 0.026534871836802334, -12.051676079137444),
    (0.05623413251903491, 0.9992095868212334, -1.9041335085990954, 0.028105953477538772, -11.383393404222849),
    (0.059566214352901034, 0.9991131632146254, -1.8672740588570884, 0.029769899822656695, -10.752722790456788),
    (0.06309573444801933, 0.9990049796857939, -1.8303926389083318, 0.03153217053776342, -10.157566672138037),
    (0.06683439175686146, 0.9988836027406792, -1.7934870550686008, 0.033398540709451405, -9.595944764767532),
    (0.0707945784384138, 0.9987474243435501, -1.7565549057762169, 0.03537511801283226, -9.065987473482817),
    (0.07498942093324558, 0.998594640715733, -1.7195935636067776, 0.03746836060988743, -8.565929666439834),
    (0.07943282347242814, 0.9984232285722414, -1.682600156013131, 0.03968509576812802, -8.094104792342362),
    (0.08413951416451952, 0.9982309184901104, -1.6455715447516743, 0.04203253917834944, -7.648939322444336),
    (0.08912509381337455, 0.9980151650665379, -1.6085043039665092, 0.04451831493704544, -7.228947498407993),
    (0.09440608762859236, 0.9977731134853071, -1.5713946969167794, 0.04715047614281279, -6.832726368395064),
    (0.1, 0.99750156206604, -1.5342386513503667, 0.049937526036242, -6.4589510947020266),
    (0.10592537251772886, 0.997196920322228, -1.497031733549833, 0.05288843958865379, -6.106370517126492),
    (0.11220184543019636, 0.9968551620002989, -1.459769121105084, 0.05601268541577496, -5.773802957073295),
    (0.11885022274370183, 0.9964717725128237, -1.4224455745028504, 0.05932024785707201, -5.460132248177874),
    (0.12589254117941676, 0.9960416901139286, -1.385055407667083, 0.0628216490188178, -5.164303979943713),
    (0.1333521432163324, 0.9955592400937072, -1.3475924576384295, 0.06652797052768479, -4.885321941562477),
    (0.1412537544622754, 0.9950180611905871, -1.3100500536469126, 0.0704508746801289, -4.622244753711483),
    (0.14962356560944334, 0.9944110233359359, -1.2724209859120992, 0.07460262459914291, -4.374182676706427),
    (0.15848931924611134, 0.993730135753556, -1.2346974746019996, 0.07899610292189062, -4.140294583928922),
    (0.16788040181225605, 0.9929664443381125, -1.1968711394987774, 0.08364482843665037, -3.9197850899512034),
    (0.1778279410038923, 0.9921099171311951, -1.1589329710596856, 0.08856296996232942, -3.711901823246233),
    (0.18836490894898, 0.9911493166021557, -1.1208733037296579, 0.09376535661496178, -3.5159328338026934),
    (0.19952623149688797, 0.9900720573240214, -1.0826817925625907, 0.09926748342887767, -3.3312041263637964),
    (0.21134890398366465, 0.9888640475141172, -1.0443473944472177, 0.10508551109075666, -3.1570773103793517),
    (0.223872113856834, 0.9875095127867187, -1.005858355517179, 0.11123625829689957, -2.9929473581056425),
    (0.23713737056616552, 0.9859908003441941, -0.9672022066610291, 0.11773718495124164, -2.838240462611906),
    (0.25118864315095796, 0.9842881617179602, -0.9283657694451801, 0.1246063640763932, -2.69241198776056),
    (0.26607250597988097, 0.9823795120670116, -0.8893351752311536, 0.13186243990374405, -2.5549445025277686),
    (0.28183829312644537, 0.9802401639575561, -0.8500959008192793, 0.1395245691316786, -2.4253458923295512),
    (0.298538261891796, 0.9778425334927107, -0.8106328245969266, 0.14761234178223517, -2.3031475403270747),
    (0.314, 0.9755024779385003, -0.7758197710714004, 0.15507298627474178, -2.201696296666698),
    (0.31622776601683794, 0.975155816649713, -0.7709303079247533, 0.15614567743386049, -2.1879025720164273),
    (0.3349654391578276, 0.9721456337311317, -0.7309723073750719, 0.1651446918477584, -2.079184156779758),
    (0.346, 0.9702941929639759, -0.7083556538344759, 0.17042402299808526, -2.02068854280707),
    (0.35481338923357547, 0.9687736399685385, -0.6907425244594979, 0.17462952812304922, -1.9765838605077295),
    (0.37583740428844414, 0.9649971005606917, -0.6502246006669383, 0.18462014549597117, -1.8797100439245775),
    (0.3981071705534973, 0.9607684288198691, -0.6094023669969335, 0.19513605772457873, -1.78818630189061),
    (0.4216965034285822, 0.9560346866855102, -0.5682601587366931, 0.20619601165689294, -1.7016499397651683),
    (0.44668359215096304, 0.9507370477014114, -0.5267832080111975, 0.2178175950525076, -1.6197504839388062),
    (0.4731512589614805, 0.9448102237133138, -0.4849581286503243, 0.23001676100322563, -1.5421482249525593),
    (0.5, 0.9384698072408129, -0.44451873350670656, 0.2422684576748739, -1.471472392670243),
    (0.5011872336272722, 0.9381818581169792, -0.4427735101759635, 0.2428072543703036, -1.4685127932958215),
    (0.5308844442309885, 0.9307718905827088, -0.40022064021829357, 0.2561999235252495, -1.3985217701123533),
    (0.5623413251903491, 0.9224919009351897, -0.35729437741374964, 0.2702018983611308, -1.3318593377680044),
    (0.5956621435290104, 0.9132444434408717, -0.313994199788536, 0.28481561306357417, -1.268214978691114),
    (0.6309573444801934, 0.90292238734534, -0.2703254567340352, 0.3000376495528678, -1.207282235264132),
    (0.6683439175686146, 0.8914082853444495, -0.22630085583798418, 0.3158573749256146, -1.148757549032443),
    (0.707945784384138, 0.8785737990407515, -0.18194221889735215, 0.33225534378206056, -1.0923392043496352),
    (0.7498942093324559, 0.8642792196499968, -0.13728254418043706, 0.349201434238927, -1.0377264100808665),
    (0.7943282347242814, 0.8483731336436807, -0.09236841410144385, 0.36665268500603143, -0.9846185634575368),
    (0.8413951416451951, 0.8306922970438925, -0.04726278846207733, 0.3845508005805317, -0.9327147529684376),
    (0.8912509381337455, 0.8110617991544622, -0.002048222667794, 0.40281929297930696, -0.8817135726554605),
    (0.9440608762859236, 0.7892956170506452, 0.04316945301867341, 0.421360232290296, -0.831313338723358),
    (1.0, 0.7651976865579666, 0.08825696421567696, 0.4400505857449335, -0.7812128213002887),
    (1.0592537251772887, 0.7385636440341448, 0.13304891653116097, 0.45873813739447056, -0.7311126297268205),
    (1.122018454301963, 0.7091834261423301, 0.1773426159816291, 0.4772369996163334, -0.6807174189446269),
    (1.188502227437019, 0.6768449517574762, 0.22089241792709335, 0.49532275586996344, -0.6297391171200637),
    (1.2589254117941675, 0.6413391504406563, 0.26340367880813864, 0.5127273142109252, -0.5779014097799654),
    (1.333521432163324, 0.6024666439990902, 0.30452644367342724, 0.5291336065205077, -0.524945751890769),
    (1.412537544622754, 0.560046428777831, 0.3438490823409607, 0.5441703433124723, -0.4706392137760085),
    (1.4962356560944328, 0.5139269420462576, 0.3808921932531555, 0.5574071330091458, -0.414784495224606),
    (1.551, 0.483199944154657, 0.4026263592588507, 0.564543884216342, -0.37905089991843355),
    (1.571, 0.47188576658449094, 0.4100782332084276, 0.566846718680886, -0.3661493999895032),
    (1.584893192461114, 0.4639999193102593, 0.4151032323642316, 0.5683504027834708, -0.3572324580402948),
    (1.6788040181225607, 0.41021745053389624, 0.44585250051676717, 0.5764407204540875, -0.29789752105434836),
    (1.7782794100389228, 0.35261260778207754, 0.47243134181262597, 0.5810523177232063, -0.23677621975970956),
    (1.8836490894898001, 0.2913239249868414, 0.4940536705706642, 0.5814958564520186, -0.1739691367276449),
    (1.9952623149688788, 0.22662383608742354, 0.5098622546672654, 0.5770257598654948, -0.1097062342975604),
    (2.0, 0.22389077914123567, 0.5103756726497451, 0.5767248077568734, -0.10703243154093754),
    (2.1134890398366477, 0.15895088677709893, 0.5189415303267388, 0.5668537408127737, -0.04437533624185488),
    (2.23872113856834, 0.08894508551123989, 0.5203390881175941, 0.5501704795523656, 0.021446928439645983),
    (2.371373705661655, 0.01748510196866957, 0.5130983145772428, 0.5261776970652015, 0.08696303367892302),
    (2.5118864315095797, -0.05427489785082407, 0.49630493514184504, 0.4941330751053038, 0.1511234996081443),
    (2.6607250597988084, -0.12487222251460144, 0.46915028244716594, 0.4534104956099059, 0.21260020964495116),
    (2.818382931264455, -0.19251145540109668, 0.43101386259279423, 0.403577769820481, 0.2697689109031678),
    (2.9853826189179604, -0.25505603696243606, 0.3815670048912974, 0.3444932072735811, 0.3207074856845395),
    (3.1622776601683795, -0.31004478898638266, 0.32089778606786884, 0.27642078213653665, 0.3632185910150255),
    (3.3496543915782757, -0.35474483650292576, 0.24965468251182457, 0.2001609784265775, 0.3948873116496225),
    (3.5, -0.3801277399872634, 0.1890219439208265, 0.1373775273623272, 0.41018841788751187),
    (3.5481338923357533, -0.3862543916124746, 0.1692021486262514, 0.11719029386527026, 0.41318619013813046),
    (3.758374042884443, -0.40166994177396975, 0.08177519015353163, 0.02979653985847163, 0.41564076151679596),
    (3.981071705534973, -0.39833153374235025, -0.00938821810426423, -0.05881067814544334, 0.40006757148650124),
    (4.216965034285822, -0.3741556397468326, -0.0999682038842448, -0.1444444086013048, 0.3648922434339451),
    (4.46683592150963, -0.328055687449284, -0.18458025242441325, -0.2219802554175885, 0.3095457462552654),
    (4.731512589614803, -0.2604336149773455, -0.25694198964333154, -0.2855417207849242, 0.2349206468023777),
    (5.0, -0.1775967713143383, -0.30851762524903376, -0.32757913759146523, 0.14786314339122683),
    (5.011872336272725, -0.1736998365941285, -0.31024925843532924, -0.3288860461935298, 0.14384407392404325),
    (5.308844442309884, -0.07274290788620981, -0.3378177759718228, -0.34604082200043473, 0.0414897432779662),
    (5.623413251903491, 0.03477428974367091, -0.3340252609201831, -0.33221934872739534, -0.0643903498129562),
    (5.956621435290104, 0.13846123368916619, -0.2955398059695117, -0.28499375680706907, -0.16357635270142262),
    (6.30957344480193, 0.22579232148237274, -0.2227340748512669, -0.20562069261054103, -0.24402379691449455),
    (6.683439175686149, 0.2834447888658317, -0.12105749908338648, -0.1002918096078149, -0.29322198852906595),
    (7.07945784384138, 0.29950563987959344, -0.001979515262099556, 0.019069303090639315, -0.30037057407170065),
    (7.498942093324558, 0.2664825991138407, 0.11703906743299042, 0.13498564961893197, -0.2592890370352355),
    (7.943282347242813, 0.1847223969814355, 0.2141692840592485, 0.2261674832868329, -0.17164974823589038),
    (8.0, 0.1716508071375539, 0.22352148938756622, 0.23463634685391463, -0.1580604617312475),
    (8.413951416451948, 0.06537593930222538, 0.26694151461562116, 0.27127495666498636, -0.04967965239442188),
    (8.91250938133746, -0.06844699306082856, 0.2581371053167172, 0.25470750608727183, 0.08299057006255085),
    (9.42477796076938, -0.1812114535089279, 0.1860551535901294, 0.17672519911152929, 0.19130590824331517),
    (9.440608762859236, -0.18398399746151922, 0.18300599415549693, 0.17354053413677983, 0.19390397565240441),
    (10.0, -0.24593576445134835, 0.055671167283599395, 0.04347274616886144, 0.24901542420695388),
    (10.592537251772887, -0.22838441042794128, -0.08874317513512624, -0.09959779524998509, 0.22445558929890494),
    (11.220184543019629, -0.12885416234701963, -0.20019937936055485, -0.20612673394986247, 0.12007646821419936),
    (11.88502227437019, 0.021614950749455138, -0.23032763140065565, -0.2296215193778571, -0.03130692664801703),
    (11.9, 0.025049441699589562, -0.22983321394337508, -0.22898324966192407, -0.034711498334030526),
    (11.99999, 0.04768707632247317, -0.22523788361552008, -0.2234477675788375, -0.0570970134666983),
    (12.0, 0.047689310796833535, -0.22523731263436145, -0.2234471044906276, -0.05709921826089652),
    (12.00001, 0.047691545264562915, -0.2252367416311549, -0.22344644138078076, -0.05710142304758715),
    (12.1, 0.06966677360680738, -0.21843838055092546, -0.21574897337692478, -0.07873693145139582),
    (12.589254117941675, 0.16099886183584652, -0.15687064996542285, -0.1506087842128608, -0.16734533288209327),
    (13.33521432163324, 0.21834491630097663, -0.0056566508056539585, 0.0025148785864731737, -0.2187088881366744),
    (14.12537544622754, 0.15313070673306028, 0.14694288954386836, 0.15244797125162404, -0.1480309435848357),
    (14.962356560944327, -0.00648568737093244, 0.20611271018367672, 0.20601051444389487, 0.013369409170550774),
    (15.848931924611142, -0.15923194469907537, 0.1216278033408111, 0.11666946933519295, 0.16314402790583146),
    (16.788040181225607, -0.1867133620801048, -0.055158231826064115, -0.060738589011463895, 0.18515437922342323),
    (17.78279410038923, -0.05380041460363195, -0.18135930978421808, -0.18294217585730654, 0.04872627690633587),
    (18.836490894898002, 0.12738737144708787, -0.13250569857844305, -0.12917313996802815, -0.13094685968833486),
    (18.8495559215388, 0.12906351943682406, -0.13078420981282068, -0.1274088926969837, -0.13257546827283978),
    (19.952623149688787, 0.17000601557417058, 0.05472246925205319, 0.05899717312047599, -0.16868873239357907),
    (21.134890398366476, 0.013308545087590745, 0.17302089328634845, 0.17338381688630272, -0.009221278334840608),
    (22.3872113856834, -0.1556330713461521, 0.06486940007612227, 0.0614113149116407, 0.15711985446175925),
    (23.71373705661655, -0.097689949422016, -0.131517136754753, -0.1336051555729524, 0.09493981459030912),
    (25.0, 0.09626678327595811, -0.12724943226800614, -0.1253502495802899, -0.09882996478323741),
    (25.118864315095795, 0.11041797752903669, -0.11466103169181517, -0.11248664859677505, -0.11272126811626289),
    (26.607250597988084, 0.11983527444261184, 0.09778468504184697, 0.10005305008854455, -0.11801947591751594),
    (28.18382931264455, -0.09571331810111594, 0.11585998254067638, 0.11418069321472156, 0.09778314002715353),
    (29.853826189179603, -0.10278424340255055, -0.10371584392960162, -0.10545134229546134, 0.1010620583390458),
    (31.622776601683793, 0.11848041051601228, -0.0780484780747812, -0.07618534601963464, -0.11972894482370659),
    (33.49654391578276, 0.038004621411395066, 0.1325106434076494, 0.13309255112117696, -0.03603131409207115),
    (35.481338923357534, -0.13272564185196706, -0.018014101614294363, -0.019885875993354986, 0.13248500112917994),
    (37.58374042884443, 0.08048013179812775, -0.10227488953134314, -0.10121344173656914, -0.08184763244233359),
    (39.810717055349734, 0.031006094120165376, 0.12259089660483352, 0.12298991344233647, -0.02946910747998077),
    (42.169650342858226, -0.10534462898998506, -0.06323039499616133, -0.06448371787202752, 0.10460241818447305),
    (44.6683592150963, 0.11875650012590762, -0.012171399813426116, -0.010843014589294505, -0.11890015902775124),
    (47.315125896148025, -0.09594118250939535, 0.0651876362381538, 0.06417753335039221, 0.09663532565701465),
    (50.11872336272725, 0.0669558199317402, -0.09065605827748288, -0.08999266110454204, -0.06786347299882557),
    (53.08844442309885, -0.04904671343593622, 0.09790592889868656, 0.09744837573015232, 0.049970907905715706),
    (56.23413251903491, 0.048056961295946395, -0.09492607410321476, -0.09450256475684835, -0.048902818734715844),
    (59.566214352901035, -0.06332246936614351, 0.0817158910435877, 0.08118727594825459, 0.06401057576765266),
    (63.0957344480193, 0.08699398642081954, -0.05021427178821678, -0.0495265101986622, -0.087394613157516),
    (66.83439175686149, -0.09733166513014194, -0.0071841864161320225, -0.007912502203609537, 0.09728064473572795),
    (70.79457843841381, 0.05951033586530727, 0.0738294590392725, 0.0742515817967631, -0.058990411216368624),
    (74.98942093324558, 0.033741226697336216, -0.08573681866924178, -0.0855137606915673, -0.03431361053226402),
    (79.43282347242814, -0.08902042706921132, -0.009474857242041989, -0.01003537310162179, 0.08896255190031782),
    (84.13951416451947, -0.008720643513675236, 0.08654511533554429, 0.0864948224093312, 0.009235074616214044),
    (89.12509381337459, 0.07868257695767741, 0.030853379566858786, 0.031295267627521, -0.07851073004718509),
    (94.40608762859236, 0.06643003672838198, -0.04827395067921643, -0.047922806159978196, -0.06668663290305912),
    (100.0, 0.019985850304223122, -0.07724431336508315, -0.07714535201411216, -0.020372312002759792),
    (105.92537251772897, -0.008091141105619025, -0.07710087347883476, -0.07713992411017571, 0.007727299749332178),
    (112.2018454301963, -0.008359310119672041, -0.07485950373137008, -0.07489749740225536, 0.008025806718031173),
    (118.85022274370189, 0.018393858922771, -0.07083859395665752, -0.07076183961247291, -0.018692032648668304),
    (125.89254117941663, 0.060341512802735, -0.037625955847829684, -0.037386601516046954, -0.06049142310605979),
    (133.3521432163324, 0.05627735954755117, 0.04008491058300638, 0.04029619969003017, -0.05612746000229807),
    (141.25375446227554, -0.041509666112391395, 0.05276212872416121, 0.05261552811964572, 0.04169668743678553),
    (149.6235656094433, -0.024697753080410965, -0.06037223504482197, -0.060455104156111, 0.024496146143991534),
    (158.48931924611142, 0.051452849848318626, 0.03700518159715214, 0.0371676868882451, -0.051336363585447846),
    (167.88040181225588, -0.05117444976093469, -0.034252910186949787, -0.034405474156309034, 0.051072661810893365),
    (177.82794100389228, 0.026463152505843787, 0.0536624959675303, 0.05373711410976006, -0.026312375102707883),
    (188.3649089489802, 0.03537137245463283, -0.046136422108514465, -0.04604269474344051, -0.03549396174297799),
    (199.52623149688787, -0.038541200908602344, -0.0412943439297751, -0.04139105476592826, 0.03843784157753803),
    (211.34890398366477, -0.05472391511612605, -0.004178415149676021, -0.004307889564283759, 0.054714183193630146),
    (223.87211385683378, -0.05329689035352427, -0.001763647949101079, -0.0018826859860844667, 0.05329308433261755),
    (237.13737056616552, -0.03854074288473466, -0.034629589815826756, -0.03471092891136885, 0.03846781299250174),
    (251.18864315095823, 0.030311666314503424, -0.040194860707933204, -0.04013460411716143, -0.030391735358295376),
    (266.0725059798809, 0.00865808673774991, 0.04814237776794409, 0.048158732876488426, -0.008567633812731198),
    (281.8382931264455, -0.005693849188432616, -0.04718462374299808, -0.04719479923179103, 0.005610149730517534),
    (298.53826189179574, -0.03535323771297652, 0.029708615059002637, 0.029649446327391544, 0.03540304395272374),
    (316.22776601683796, 0.012748013916494882, 0.043019229525250585, 0.04303943962786783, -0.012680010647063537),
    (334.9654391578279, 0.016974798889237253, 0.04015479658334418, 0.04018017939604822, -0.01691487921763488),
    (354.8133892335753, -0.023863685132588384, 0.034996586269879754, 0.034962992583270305, 0.02391302561955873),
    (375.8374042884443, -0.014831004711268823, -0.0383915352937825, -0.03841129984534259, 0.014779943265930717),
    (398.1071705534969, 0.0035946367227649373, 0.039827049776096836, 0.03983159583973294, -0.0035446191237456294),
    (421.6965034285823, 0.038778251338874074, -0.0024309567300413223, -0.0023849796406606775, -0.03878116094628365),
    (446.6835921509635, 0.036936392628579735, -0.007804879778119788, -0.007763539578037397, -0.03694515223218437),
    (473.15125896148027, 0.01575970236965651, 0.033122800929388733, 0.033139473384041586, -0.01572470886981606),
    (501.18723362727246, -0.02247791303452768, -0.027658022964037635, -0.02768046137160381, 0.022450331742229285),
    (530.8844442309879, -0.023361383312935784, 0.025561954002569498, 0.02553996303497432, 0.023385468528379118),
    (562.341325190349, -0.023696743875565612, 0.02388622438616366, 0.02386516412877369, 0.02371799141619445),
    (595.6621435290109, -0.014374849125018891, -0.029361933995905146, -0.02937401060874002, 0.014350207740204816),
    (630.957344480193, -0.008852143664614237, 0.030505959731670078, 0.0304989544633595, 0.008876320772824204),
    (668.3439175686149, 0.0009290408965474654, 0.03084914616723806, 0.030849849831706015, -0.0009059623732184007),
    (707.9457843841374, -0.02863158039852718, -0.008915251523206878, -0.008935475327783743, 0.028625290978836752),
    (749.8942093324558, 0.00467661497635886, 0.02875891503945594, 0.02876203961387572, -0.004657440709636265),
    (794.3282347242822, -0.008109799858131686, 0.027123565336579693, 0.027118465895520298, 0.008126874730839078),
    (841.3951416451947, 0.006366239277029045, -0.026759949203282705, -0.026756170784756773, -0.006382142525097102),
    (891.2509381337459, -0.004682688654245646, -0.026312952086974446, -0.026315583258437907, 0.004667927586870276),
    (944.0608762859226, 0.018137735373509784, 0.0185839803687097, 0.018593589204337003, -0.01812789534490834),
    (1000.0, 0.024786686152420176, 0.0047159179776228135, 0.004728311907089524, -0.024784331292351778),
    (1059.2537251772897, -0.023762312340130945, 0.006029947384210477, 0.006018731523778052, 0.02376516130547171),
    (1122.018454301963, -0.022643207207482807, 0.007394124720319326, 0.007384035066659422, 0.02264650446538987),
    (1188.502227437019, 0.022706791720452396, 0.004477761260732484, 0.004487314347410847, -0.022704909946895648),
    (1258.9254117941662, 0.0015266984894224968, 0.022435556864373568, 0.022436164983619132, -0.0015177880130985632),
    (1333.521432163324, 0.016702138098666663, 0.014086732418149828, 0.014092995825784358, -0.016696857493911588),
    (1412.5375446227554, -0.008146551848717867, -0.019604232931799227, -0.019607117818130147, 0.008139612992925344),
    (1496.235656094433, 0.020599230920331047, 0.001073598807639212, 0.001080482552161433, -0.020598873303921118),
    (1584.893192461114, 0.014732352735224347, 0.013588144976876649, 0.01359279339568578, -0.014728066698846937),
    (1678.804018122559, 0.017874348949523673, 0.007727737769456536, 0.007733061648226964, -0.01787204818206249),
    (1778.2794100389228, 0.015091137163649276, -0.011412938771078964, -0.011408696037514592, -0.015094346743481285),
    (1883.649089489802, -0.009153318989637399, -0.01594328302474448, -0.01594571326358384, 0.009149087291931013),
    (1995.2623149688789, -0.01620279005256364, 0.007518995084429231, 0.007514935005008142, 0.016204674773362734),
    (2113.489039836648, 0.0003033088452964822, 0.0173529663772678, 0.01735303861835028, -0.0002992035650699828),
    (2238.7211385683377, 0.007320956037508761, 0.01519115539911289, 0.015192790853380867, -0.007317563400336989),
    (2371.373705661655, -0.004158305604300943, 0.015848306551637676, 0.01584743013249376, 0.004161647284314271),
    (2511.886431509582, -0.009019806024161147, -0.013118154998366872, -0.01311995068290921, 0.009017194987172789),
    (2548.18, -0.014320140169740044, 0.006690792604187516, 0.006687982856997369, 0.014321453302502308),
    (2660.7250597988086, -0.008495486644605378, 0.012926415791394788, 0.012924819558864872, 0.008497915909800882),
    (2818.382931264455, -0.013776997872264926, 0.006006292130746065, 0.006003848093687132, 0.013778063645467825),
    (2985.382618917957, 0.014551249261816375, 0.0012275029765069013, 0.001229940076454189, -0.014551043880369936),
    (3162.2776601683795, 0.007059685345331114, 0.012307627258184458, 0.012308743646264636, -0.007057739426889405),
    (3349.6543915782795, 0.013753429821168166, -0.0009479063062524546, -0.0009458533543415444, -0.01375357146753751),
    (3548.133892335753, -0.011816549992987733, -0.006308167285062244, -0.006309832525803945, 0.011815661168782923),
    (3758.374042884443, 0.012630003837757947, 0.0031416587576379267, 0.00314333903379556, -0.012629585995023018),
    (3981.071705534969, -0.01256692921931061, 0.0014085260237936908, 0.0014069476999779978, 0.012567106221293143),
    (4216.965034285822, 0.012125434076010508, 0.0019849902460263528, 0.0019864279567360444, -0.012125198803562947),
    (4466.835921509635, 0.003259461189343853, -0.01148465611262584, -0.011484291333346698, -0.0032607467568681746),
    (4731.512589614803, 0.010115643836481834, -0.005676498935647379, -0.0056754300022353365, -0.01011624375387054),
    (5011.872336272725, -0.010929381718311933, -0.0027515375156869546, -0.00275262787854211, 0.010929107270747312),
    (5308.844442309879, 0.0036336473751630138, -0.010330219343182397, -0.010329877163173193, -0.0036346203166832177),
    (5623.413251903491, 0.007235293077026421, -0.007801238168683875, -0.007800594880890838, -0.007235986744681352),
    (5956.62143529011, 0.008391932569472146, -0.006037503669531577, -0.0060367992703006645, -0.008392439388304165),
    (6309.57344480193, 0.008955697883627996, 0.0045489459703902625, 0.004549655675899325, -0.00895533743207481),
    (6683.439175686149, -0.00862883727425681, -0.004560316579684894, -0.004560962131142896, 0.00862849613299219),
    (7079.457843841374, -0.007467032847356873, -0.005845370240117712, -0.0058458976279060805, 0.007466620025735974),
    (7498.942093324558, -0.0062522038749556605, 0.006767906439689614, 0.006767489582342227, 0.006252655146265771),
    (7943.282347242822, 0.007628849638992279, 0.004684691445045875, 0.004685171661958555, -0.007628554770251758),
    (8413.951416451948, 0.008696823351884528, -0.00016632859481407816, -0.00016581178541331785, -0.0086968332513355),
    (8912.509381337459, -0.0047470529466084625, 0.006992524687599169, 0.006992258384553359, 0.004747445241164543),
    (9440.608762859227, -0.0064743096437487255, 0.005051485037340219, 0.0050511421475956005, 0.0064745771930455175),
    (10000.0, -0.0070961603533888015, 0.0036478055589866058, 0.0036474507555295803, 0.007096342752536495),
];
