// Generated offline with mpmath (60 digits); do not edit by hand.

/// Taylor coefficients in eta of the uniform-expansion functions C_k(eta), k = 0..=15.
pub(crate) const TEMME_C: [[f64; 45]; 16] = [
    [
        -0.3333333333333333,
        0.08333333333333333,
        -0.014814814814814815,
        0.0011574074074074073,
        0.0003527336860670194,
        -0.0001787551440329218,
        3.919263178522438e-05,
        -2.185448510679992e-06,
        -1.85406221071516e-06,
        8.296711340953087e-07,
        -1.7665952736826078e-07,
        6.707853543401498e-09,
        1.0261809784240309e-08,
        -4.382036018453353e-09,
        9.14769958223679e-10,
        -2.5514193994946248e-11,
        -5.830772132550426e-11,
        2.4361948020667415e-11,
        -5.0276692801141755e-12,
        1.1004392031956135e-13,
        3.371763262400985e-13,
        -1.392388722418162e-13,
        2.8534893807047445e-14,
        -5.139111834242572e-16,
        -1.9752288294349442e-15,
        8.099521156704561e-16,
        -1.6522531216398162e-16,
        2.5305430097478883e-18,
        1.1686939738559576e-17,
        -4.770037049820485e-18,
        9.699126059056237e-19,
        -1.2932565538038175e-20,
        -6.969230253185693e-20,
        2.835145432176937e-20,
        -5.7509821590070474e-21,
        6.792953783488915e-23,
        4.182125426111336e-22,
        -1.6971539620047604e-22,
        3.43621593839432e-23,
        -3.643995779628021e-25,
        -2.522535663578434e-24,
        1.0217275578876767e-24,
        -2.0656189282895155e-25,
        1.987728212387035e-27,
        1.5280113092999194e-26,
    ],
    [
        -0.001851851851851852,
        -0.003472222222222222,
        0.0026455026455026454,
        -0.0009902263374485596,
        0.00020576131687242798,
        -4.018775720164609e-07,
        -1.8098550334489977e-05,
        7.64916091608111e-06,
        -1.6120900894563446e-06,
        4.647127802807434e-09,
        1.378633446915721e-07,
        -5.752545603517705e-08,
        1.1951628599778148e-08,
        -1.7543241719747647e-11,
        -1.0091543710600413e-09,
        4.162792991842583e-10,
        -8.56390702649298e-11,
        6.067215101604758e-14,
        7.1624989648114856e-12,
        -2.933186643771437e-12,
        5.996696365683689e-13,
        -2.1671786527323313e-16,
        -4.978339972369262e-14,
        2.0291628823713425e-14,
        -4.13125571381061e-15,
        8.286516239883097e-19,
        3.4100308869333327e-16,
        -1.3854195302893971e-16,
        2.812346653228875e-17,
        -3.406444194143029e-21,
        -2.3109797315115572e-18,
        9.366757064132256e-19,
        -1.8972570152858488e-19,
        1.4912630740339597e-23,
        1.5534900047251396e-20,
        -6.285130454237188e-21,
        1.2709110113722471e-21,
        -6.863385717627884e-26,
        -1.0376493982513261e-22,
        4.192119650489165e-23,
        -8.465388193517762e-24,
        3.283499753361086e-28,
        6.895384671610439e-25,
        -2.7825036058009553e-25,
        5.612656365860039e-26,
    ],
    [
        0.004133597883597883,
        -0.0026813271604938273,
        0.0007716049382716049,
        2.0093878600823047e-06,
        -0.0001073665322636516,
        5.2923448829120125e-05,
        -1.2760635188618728e-05,
        3.423578734096138e-08,
        1.3721957309062934e-06,
        -6.298992138380055e-07,
        1.4280614206064242e-07,
        -2.0477098421990866e-10,
        -1.409252991086752e-08,
        6.228974084922022e-09,
        -1.3670488396617114e-09,
        9.428356159014678e-13,
        1.2872252400089318e-10,
        -5.5645956134363323e-11,
        1.197593554636698e-11,
        -4.1689782251838634e-15,
        -1.0940640427884595e-12,
        4.662239946390136e-13,
        -9.905105763906907e-14,
        1.8931876768373515e-17,
        8.859221872591127e-15,
        -3.737820398046405e-15,
        7.868833639035156e-16,
        -9.000027395741211e-20,
        -6.928881229347671e-17,
        2.9020384270164786e-17,
        -6.067854696810877e-18,
        4.472120729796853e-22,
        5.279446144449786e-19,
        -2.198811233485732e-19,
        4.5732827721348786e-20,
        -2.3035862647067298e-24,
        -3.941615586470973e-21,
        1.6343373741206338e-21,
        -3.38496214687294e-22,
        1.2197072676409612e-26,
        2.895185681637642e-23,
        -1.1961217839812553e-23,
        2.4688515721838724e-24,
        -6.595043912668521e-29,
        -2.0983302479401647e-25,
    ],
    [
        0.0006494341563786008,
        0.00022947209362139917,
        -0.0004691894943952557,
        0.00026772063206283885,
        -7.561801671883977e-05,
        -2.396505113867297e-07,
        1.1082654115347302e-05,
        -5.6749528269915965e-06,
        1.4230900732435883e-06,
        -2.7861080291528143e-11,
        -1.6958404091930278e-07,
        8.099464905388083e-08,
        -1.9111168485973655e-08,
        2.3928620439808118e-12,
        2.0620131815488797e-09,
        -9.460496661855133e-10,
        2.1541049775774907e-10,
        -1.388823336813903e-14,
        -2.1894761681963938e-11,
        9.790998951171684e-12,
        -2.178219188018096e-12,
        6.208819573407901e-17,
        2.126978363279737e-13,
        -9.344688791517433e-14,
        2.045367122678285e-14,
        -2.58260790403495e-19,
        -1.9405297673344544e-15,
        8.415979290484816e-16,
        -1.8200430439538226e-16,
        1.0735443641247309e-21,
        1.6896828315252834e-17,
        -7.256111746942148e-18,
        1.5547292746622028e-18,
        -4.605994752275239e-24,
        -1.4191358137761748e-19,
        6.047066498377825e-20,
        -1.2861734793467812e-20,
        2.0623332993667594e-26,
        1.158166408846306e-21,
        -4.904109085068004e-22,
        1.0368500228833457e-22,
        -9.6283030858207e-29,
        -9.23320695095029e-24,
        3.8894380157947714e-24,
        -8.182527974304913e-25,
    ],
    [
        -0.0008618882909167117,
        0.0007840392217200666,
        -0.0002990724803031902,
        -1.4638452578843418e-06,
        6.641498215465122e-05,
        -3.968365047179435e-05,
        1.1375726970678419e-05,
        2.507497226237533e-10,
        -1.6954149536558305e-06,
        8.907507532205309e-07,
        -2.292934834000805e-07,
        2.956794137544049e-11,
        2.8865829742708783e-08,
        -1.4189739437803219e-08,
        3.4463580499464896e-09,
        -2.3024517174528067e-13,
        -3.9409233028046403e-10,
        1.86023389685045e-10,
        -4.356323005056618e-11,
        1.278600101629623e-15,
        4.67927502665792e-12,
        -2.149246470613483e-12,
        4.908815614809652e-13,
        -6.33859148489156e-18,
        -5.045332069080094e-14,
        2.2722958222901286e-14,
        -5.096082608472402e-15,
        3.0552097557171355e-20,
        5.069021676310552e-16,
        -2.249383695648181e-16,
        4.9751114221314184e-17,
        -1.4903016393517331e-22,
        -4.8250457744004236e-18,
        2.1164667685646584e-18,
        -4.630211328749248e-19,
        7.474753874999949e-25,
        4.40102275680519e-20,
        -1.9125986486817926e-20,
        4.147392206376728e-21,
        -3.863984731116609e-27,
        -3.877941130883722e-22,
        1.6724560022121336e-22,
        -3.600307568675161e-23,
        2.0511489923951792e-29,
        3.3208256584002745e-24,
    ],
    [
        -0.00033679855336635813,
        -6.972813758365857e-05,
        0.0002772753244959392,
        -0.00019932570516188847,
        6.797780477937208e-05,
        1.419062920643967e-07,
        -1.3594048189768693e-05,
        8.018470256334202e-06,
        -2.291481176508095e-06,
        -3.252473551298454e-10,
        3.4652846491085265e-07,
        -1.8447187191171344e-07,
        4.8240967037894184e-08,
        -1.7989466721743514e-14,
        -6.306194500013523e-09,
        3.162417628774568e-09,
        -7.840924253697429e-10,
        5.192679165254041e-15,
        9.358944242306784e-11,
        -4.513426216163278e-11,
        1.0799129993116828e-11,
        -3.661886712685252e-17,
        -1.210902069055155e-12,
        5.680743584990564e-13,
        -1.3249659916340829e-13,
        1.8987240764284076e-19,
        1.4193390236794701e-14,
        -6.523214701424697e-15,
        1.4925242636202885e-15,
        -8.800389458732369e-22,
        -1.544022252303382e-16,
        6.984341350227234e-17,
        -1.5742663876248805e-17,
        3.932986381427749e-24,
        1.5843727014454443e-18,
        -7.076615532716853e-19,
        1.5760057594727924e-19,
        -1.7631877362613744e-26,
        -1.5511791464815588e-20,
        6.85706989477331e-21,
        -1.5121272010766692e-21,
        8.091958743372859e-29,
        1.4611649092223777e-22,
        -6.403831130773868e-23,
        1.4005952052196816e-23,
    ],
    [
        0.0005313079364639922,
        -0.0005921664373536939,
        0.0002708782096718045,
        7.902353232660328e-07,
        -8.153969367561969e-05,
        5.61168275310625e-05,
        -1.8329116582843375e-05,
        -3.0796134506033047e-09,
        3.465155368803609e-06,
        -2.0291327396058603e-06,
        5.788792863149004e-07,
        2.338630673826657e-13,
        -8.828600746330484e-08,
        4.7435958880408125e-08,
        -1.2545415020710383e-08,
        8.649648858010293e-14,
        1.6846058979264062e-09,
        -8.575492823577594e-10,
        2.1598224929232125e-10,
        -7.613230520476153e-16,
        -2.6639822008536144e-11,
        1.3065700536611057e-11,
        -3.1799163902367977e-12,
        4.710976121367431e-18,
        3.6902800842763465e-13,
        -1.7612674046201426e-13,
        4.179066786051478e-14,
        -2.5344679379178804e-20,
        -4.632065942001605e-15,
        2.165145485964643e-15,
        -5.037651764097622e-16,
        1.288867868779697e-22,
        5.386866698963065e-17,
        -2.476815238761488e-17,
        5.673620333096777e-18,
        -6.476428622565631e-25,
        -5.894480465018107e-19,
        2.6742571406222053e-19,
        -6.048508564705739e-20,
        3.2922941808752546e-27,
        6.136892442842273e-21,
        -2.7536473149896034e-21,
        6.162618758934838e-22,
        -1.7101187545016143e-29,
        -6.130069455613654e-23,
    ],
    [
        0.00034436760689237765,
        5.171790908260592e-05,
        -0.00033493161081142234,
        0.0002812695154763237,
        -0.00010976582244684731,
        -1.2741009095484485e-07,
        2.7744451511563645e-05,
        -1.8263488805711332e-05,
        5.7876949497350525e-06,
        4.93875893393627e-10,
        -1.0595367014026043e-06,
        6.166714376110408e-07,
        -1.7562973359060463e-07,
        -1.297447328701544e-12,
        2.695423606288966e-08,
        -1.4578352908731272e-08,
        3.887645959386175e-09,
        -3.881002251019412e-17,
        -5.327994173877286e-10,
        2.7437977643314844e-10,
        -6.995796092070568e-11,
        2.589986387486848e-17,
        8.856689099669639e-12,
        -4.403168815871311e-12,
        1.0865561947091654e-12,
        -2.0467988447416678e-19,
        -1.2969794421692939e-13,
        6.278922059147728e-14,
        -1.5112948371679396e-14,
        1.1708345473797399e-21,
        1.723797918017873e-15,
        -8.173490364495222e-16,
        1.929030500558479e-16,
        -5.878720479461555e-24,
        -2.12201330796038e-17,
        9.894751460527752e-18,
        -2.2984330069367495e-18,
        2.789971152202841e-26,
        2.4547571806180844e-19,
        -1.1289954013035893e-19,
        2.5882997293765364e-20,
        -1.303182965352585e-28,
        -2.6972306827890277e-21,
        1.226314653495884e-21,
        -2.7805481024911126e-22,
    ],
    [
        -0.0006526239185953094,
        0.0008394987206720873,
        -0.000438297098541721,
        -6.969091458420552e-07,
        0.00016644846642067547,
        -0.00012783517679769218,
        4.629953263691304e-05,
        4.557909867922708e-09,
        -1.0595271125805195e-05,
        6.783342904865167e-06,
        -2.1075476666258803e-06,
        -1.7213731432817144e-11,
        3.773587741611098e-07,
        -2.1867506700122867e-07,
        6.220228804018927e-08,
        6.597703826733e-16,
        -9.590386497425686e-09,
        5.213214492280807e-09,
        -1.3991589583935709e-09,
        5.382058999060575e-16,
        1.9484714275467745e-10,
        -1.0127287556389682e-10,
        2.6077347197254926e-11,
        -5.090418699993299e-18,
        -3.3721464474854593e-12,
        1.6953089140808568e-12,
        -4.2316254586191543e-13,
        3.3823327480704694e-20,
        5.171393693611211e-14,
        -2.5337819883238846e-14,
        6.172897551625282e-15,
        -1.9332893057353022e-22,
        -7.214845211021891e-16,
        3.463162996521934e-16,
        -8.27435879522942e-17,
        1.0287761526532827e-24,
        9.328077264719642e-18,
        -4.403082056306673e-18,
        1.0353198899734755e-18,
        -5.324204173702778e-27,
        -1.1328368854667891e-19,
        5.2731530047481404e-20,
        -1.2234411640277947e-20,
        2.75065552713537e-29,
        1.3054870117683906e-21,
    ],
    [
        -0.0005967612901927463,
        -7.204895416020011e-05,
        0.0006782308837667328,
        -0.0006401475260262758,
        0.00027750107634328704,
        1.819700838046515e-07,
        -8.479507117068503e-05,
        6.105192082501531e-05,
        -2.1073920183404862e-05,
        -8.858589014125599e-10,
        4.5284535953805374e-06,
        -2.8427815022504407e-06,
        8.708234177864641e-07,
        3.6886101871706966e-12,
        -1.534469519070206e-07,
        8.862466778790695e-08,
        -2.5184812301826817e-08,
        -1.0225912098215092e-14,
        3.896947075815478e-09,
        -2.1267304792235634e-09,
        5.737013552805138e-10,
        -1.8877498501697116e-19,
        -8.093153869465787e-11,
        4.23827232834492e-11,
        -1.1002224534207725e-11,
        2.3327607706802836e-19,
        1.4479903729175772e-12,
        -7.347967787383142e-13,
        1.8518691673758749e-13,
        -1.9887568468966824e-21,
        -2.308750548951044e-14,
        1.1428437899379255e-14,
        -2.813281931871404e-15,
        1.2206155710546394e-23,
        3.3581078635784925e-16,
        -1.6291403614037366e-16,
        3.934215546790317e-17,
        -6.516810478575229e-26,
        -4.531347570714145e-18,
        2.1619927322526505e-18,
        -5.138452867740083e-19,
        3.2504289894608847e-28,
        5.744142869121763e-20,
        -2.7024734311351293e-20,
        6.3371287163422495e-21,
    ],
    [
        0.0013324454494800656,
        -0.0019144384985654776,
        0.0011089369134596636,
        9.9324041226423e-07,
        -0.0005087450129309319,
        0.00042735056665392886,
        -0.00016858853767910798,
        -8.1301893922785e-09,
        4.5284402370562144e-05,
        -3.127053674781734e-05,
        1.044986828530338e-05,
        4.8435226265680926e-11,
        -2.148256587345626e-06,
        1.329369701097492e-06,
        -4.029569309210103e-07,
        -1.756787766632329e-13,
        7.014504316366825e-08,
        -4.040787734999483e-08,
        1.1474026743371964e-08,
        3.964274685356394e-18,
        -1.7804938269892715e-09,
        9.748026254873165e-10,
        -2.6405338676507616e-10,
        5.79487516340376e-18,
        3.764774955354384e-11,
        -1.983951296757828e-11,
        5.185233656748139e-12,
        -5.749162558269406e-20,
        -6.926251638432814e-13,
        3.542815745370807e-13,
        -9.002502175000374e-14,
        4.0187136062640714e-22,
        1.1417566731145618e-14,
        -5.7019912628703855e-15,
        1.416317596430162e-15,
        -2.406325624915245e-24,
        -1.7219120765700573e-16,
        8.431771654562555e-17,
        -2.0553811468484574e-17,
        1.330050424830099e-26,
        2.4125400048493943e-18,
        -1.1620635753144913e-18,
        2.7883366350417643e-19,
        -7.075031944985285e-29,
        -3.177043880785029e-20,
    ],
    [
        0.001579727660730835,
        0.00016251626278391583,
        -0.0020633421035543276,
        0.00213896861856891,
        -0.0010108559391263003,
        -3.99127055299192e-07,
        0.0003623502508476469,
        -0.00028143901463712157,
        0.00010449513336495887,
        2.12114184918303e-09,
        -2.5779417251947842e-05,
        1.7281818956040464e-05,
        -5.641377387290428e-06,
        -1.1024320105776174e-11,
        1.1223224418895174e-06,
        -6.869339637952674e-07,
        2.0653236975414888e-07,
        4.6714772409838506e-14,
        -3.5609886164949055e-08,
        2.0470855345905963e-08,
        -5.809173863328336e-09,
        -1.3328212875828647e-16,
        9.035460439133513e-10,
        -4.959878251733084e-10,
        1.3481607129399748e-10,
        -1.670378498659395e-21,
        -1.939350490392558e-11,
        1.027416566641991e-11,
        -2.700750630126185e-12,
        3.3260696116585926e-21,
        3.653621372534978e-13,
        -1.8816571169948134e-13,
        4.815479814520388e-14,
        -2.994428122811772e-23,
        -6.198883486662108e-15,
        3.119755512318192e-15,
        -7.810448350017717e-16,
        1.9380997739825408e-25,
        9.650160025976001e-17,
        -4.764460658859176e-17,
        1.171101386234617e-17,
        -1.0862291644782168e-27,
        -1.3978993079408627e-18,
        6.790681607174483e-19,
        -1.6433372744380916e-19,
    ],
    [
        -0.004072512119514016,
        0.00640336283380807,
        -0.004041016108167662,
        -2.1837328028662328e-06,
        0.002174044180125464,
        -0.001970044051841889,
        0.0008359546974796246,
        1.9445447567109655e-08,
        -0.000257793871204217,
        0.00019009987368139304,
        -6.769649993743896e-05,
        -1.4440629666426571e-10,
        1.5712512518742267e-05,
        -1.0304008744776894e-05,
        3.304517767401387e-06,
        7.982976024232571e-13,
        -6.4097794149313e-07,
        3.8894624761300054e-07,
        -1.161834764494887e-07,
        -2.8168086305964423e-15,
        1.9878012911297094e-08,
        -1.1407719956357511e-08,
        3.2355857064185554e-09,
        4.1759462466484876e-20,
        -5.042311271810582e-10,
        2.7740247286170716e-10,
        -7.562101761668138e-11,
        9.6044764345341e-20,
        1.0960864115705617e-11,
        -5.833137061908712e-12,
        1.5409535404888976e-12,
        -9.860595283084348e-22,
        -2.1076203853518553e-13,
        1.0919144292652915e-13,
        -2.811761405912915e-14,
        7.159929509113836e-24,
        3.667060809802914e-15,
        -1.858139656927497e-15,
        4.684405544882624e-16,
        -4.4476174886036336e-26,
        -5.871177093310628e-17,
        2.919993091068423e-17,
        -7.230684007494033e-18,
        2.537974504086966e-28,
        8.761765886692674e-19,
    ],
    [
        -0.0059475779383993,
        -0.0005401647678926045,
        0.00879104135507679,
        -0.009857631558785612,
        0.005013469503102154,
        1.2807521786221875e-06,
        -0.0020626019342754685,
        0.0017109128573523059,
        -0.000676953127141338,
        -6.901154567656214e-09,
        0.00018855128143995903,
        -0.0001339521566349197,
        4.626318303352804e-05,
        4.003423061332135e-11,
        -1.0255652921494033e-05,
        6.612086372797651e-06,
        -2.0913022027253007e-06,
        -2.095177564960382e-13,
        3.975602904199325e-07,
        -2.395621197881589e-07,
        7.118288338214586e-08,
        8.925574871713252e-16,
        -1.2101547235064677e-08,
        6.935061824833439e-09,
        -1.966146445385609e-09,
        -2.5932086373242068e-18,
        3.069041962977549e-10,
        -1.6916097481155664e-10,
        4.6228606139831213e-11,
        -2.356741685349519e-23,
        -6.744385239336639e-12,
        3.603317616658274e-12,
        -9.55998877564126e-13,
        6.905288393055913e-23,
        1.3201418918973055e-13,
        -6.875116730675237e-14,
        1.7800741067876006e-14,
        -6.478215602002776e-25,
        -2.3484708375442846e-15,
        1.1971971673403867e-15,
        -3.0368872829859667e-16,
        4.3707980971185224e-27,
        3.855176990277046e-17,
        -1.9299519142929775e-17,
        4.810950311517076e-18,
    ],
    [
        0.01740202778752271,
        -0.02952788094569912,
        0.020045875571402798,
        7.0289515966903405e-06,
        -0.012375421071343148,
        0.011976293444235255,
        -0.0054156038466518525,
        -6.329089339641862e-08,
        0.0018855118129005065,
        -0.001473473274825001,
        0.0005551581009770838,
        5.240683441255066e-10,
        -0.00014357913535784835,
        9.91812932249433e-05,
        -3.346083474947831e-05,
        -3.5755837291098967e-12,
        7.1560851960630075e-06,
        -4.551680262815553e-06,
        1.4236576649271474e-06,
        1.8803149079275236e-14,
        -2.662340389892921e-07,
        1.5950642189595716e-07,
        -4.718751467384107e-08,
        -6.510781264821694e-17,
        7.979509102674677e-09,
        -4.567346319474522e-09,
        1.294400971826025e-09,
        6.834550887513605e-22,
        -2.023315571737863e-10,
        1.1170284611382989e-10,
        -3.059196408152812e-11,
        2.271759453446341e-21,
        4.488482432413193e-12,
        -2.4062908557210185e-12,
        6.408266784404297e-13,
        -2.3932704584372635e-23,
        -8.92418918264569e-14,
        4.669068952618341e-14,
        -1.2147549131925305e-14,
        1.7900588616840896e-25,
        1.6191743359149967e-15,
        -8.298793231454285e-16,
        2.1168181370663978e-16,
        -1.1454944612148905e-27,
        -2.7181871567432736e-17,
    ],
    [
        0.03024912416090589,
        0.0024817436002649977,
        -0.049939134373457025,
        0.05991564300930787,
        -0.03248320760162339,
        -5.721296865210344e-06,
        0.015085251778569354,
        -0.013261324005088445,
        0.0055515262632426145,
        3.026318225703001e-08,
        -0.0017229548406756724,
        0.0012893570099929638,
        -0.00046845138348319875,
        -1.8302599378930445e-10,
        0.00011449739014822654,
        -7.737856522124447e-05,
        2.5625836246985202e-05,
        1.0766165332658074e-12,
        -5.324680928242262e-06,
        3.3496348630644643e-06,
        -1.038125312868401e-06,
        -5.608908533478749e-15,
        1.9150821930676722e-07,
        -1.1418365800203775e-07,
        3.365442520915233e-08,
        2.393462293063064e-17,
        -5.66528360574477e-09,
        3.2393825373757883e-09,
        -9.177589221007531e-10,
        -7.042454305683657e-20,
        1.4363143786586164e-10,
        -7.940759823917548e-11,
        2.1788107064916743e-11,
        -4.862926024096045e-25,
        -3.212708105922263e-12,
        1.727555512470792e-12,
        -4.616068670008127e-13,
        1.9698935469081364e-24,
        6.476697343761451e-14,
        -3.4025052248973326e-14,
        8.890636175604385e-15,
        -1.9086812143993065e-26,
        -1.1960023489731396e-15,
        6.159667888291496e-16,
        -1.579037166205247e-16,
    ],
];

/// Taylor coefficients of 1/Gamma(1 + a) about a = 0.
pub(crate) const RGAMMA1P: [f64; 26] = [
    1.0,
    0.5772156649015329,
    -0.6558780715202539,
    -0.04200263503409524,
    0.16653861138229148,
    -0.04219773455554433,
    -0.009621971527876973,
    0.0072189432466631,
    -0.0011651675918590652,
    -0.00021524167411495098,
    0.0001280502823881162,
    -2.013485478078824e-05,
    -1.2504934821426706e-06,
    1.133027231981696e-06,
    -2.056338416977607e-07,
    6.116095104481416e-09,
    5.002007644469223e-09,
    -1.18127457048702e-09,
    1.0434267116911005e-10,
    7.782263439905071e-12,
    -3.696805618642206e-12,
    5.100370287454476e-13,
    -2.0583260535665066e-14,
    -5.348122539423018e-15,
    1.2267786282382608e-15,
    -1.1812593016974588e-16,
];

/// B_{2k} / (2k (2k - 1)), k = 1..10, for the Stirling series of ln Gamma*(a).
pub(crate) const STIRLING_LN: [f64; 10] = [
    0.08333333333333333,
    -0.002777777777777778,
    0.0007936507936507937,
    -0.0005952380952380953,
    0.0008417508417508417,
    -0.0019175269175269176,
    0.00641025641025641,
    -0.029550653594771242,
    0.17964437236883057,
    -1.3924322169059011,
];
