// Generated by tests/oracles/mittag_leffler.py (mpmath brute-force series).
#[rustfmt::skip]
// alpha, beta, z.re, z.im, E.re, E.im
pub const GRID: &[[f64; 6]] = &[
    [1.5, 2.0, 0.5, 0.0, 1.161314090135536, 0.0],
    [1.5, 2.0, 0.4045084971874737, 0.29389262614623657, 1.124791510006705, 0.09875969235857493],
    [1.5, 2.0, 0.07821723252011542, 0.4938441702975689, 1.0134419055667767, 0.15142321063731373],
    [1.5, 2.0, -0.0782172325201155, 0.49384417029756883, 0.9667644768546015, 0.14499992762929698],
    [1.5, 2.0, -0.2938926261462365, 0.4045084971874737, 0.9087513756044396, 0.11195142258971653],
    [1.5, 2.0, -0.4455032620941839, 0.22699524986977343, 0.8719987616052537, 0.06029310761655937],
    [1.5, 2.0, -0.49778098230154, 0.047054156659257204, 0.8600436480616438, 0.012323449095680658],
    [1.5, 2.0, -0.5, 0.0, 0.8595440533980158, 0.0],
    [1.5, 2.0, 7.0, 0.0, 6.996199480485968, 0.0],
    [1.5, 2.0, 5.663118960624632, 4.114496766047312, 2.412784828533635, 4.567214131302305],
    [1.5, 2.0, 1.0950412552816158, 6.913818384165964, -0.6921314523432551, 1.491956542225944],
    [1.5, 2.0, -1.095041255281617, 6.913818384165964, -0.45807688565633486, 0.7394418765020037],
    [1.5, 2.0, -4.114496766047311, 5.663118960624632, -0.10039009469777113, 0.2897333623637653],
    [1.5, 2.0, -6.237045669318575, 3.177933498176828, 0.06377073286929545, 0.1173187706273752],
    [1.5, 2.0, -6.96893375222156, 0.6587581932296008, 0.10502758433981116, 0.022409147390453486],
    [1.5, 2.0, -7.0, 0.0, 0.10663222591262393, 0.0],
    [1.5, 2.0, 14.9, 0.0, 46.89756205290698, 0.0],
    [1.5, 2.0, 12.054353216186717, 8.75800025915785, -12.70246535159081, 24.773386854696405],
    [1.5, 2.0, 2.3308735290994393, 14.716556274867553, -2.6601624749424873, -2.77627201469727],
    [1.5, 2.0, -2.330873529099442, 14.716556274867552, -0.4160505756968591, -1.1836848070726698],
    [1.5, 2.0, -8.758000259157848, 12.054353216186717, -0.00938614185052541, -0.1742114930544757],
    [1.5, 2.0, -13.27599721040668, 6.7644584461192485, 0.016706941881608567, -0.010608968966611907],
    [1.5, 2.0, -14.833873272585892, 1.4022138684458647, 0.02648962877242456, 0.0006751410890913033],
    [1.5, 2.0, -14.9, 0.0, 0.026942917963331012, 0.0],
    [1.5, 2.0, 40.0, 0.0, 6845.52762943165, 0.0],
    [1.5, 2.0, 32.3606797749979, 23.511410091698927, -909.9465054307959, -2318.1397036385874],
    [1.5, 2.0, 6.257378601609234, 39.50753362380551, -34.07047693953851, 43.38323785491956],
    [1.5, 2.0, -6.25737860160924, 39.50753362380551, -6.594935523266844, -0.7026449520710213],
    [1.5, 2.0, -23.51141009169892, 32.3606797749979, -0.13448619751200336, -0.11927764987938487],
    [1.5, 2.0, -35.640260967534715, 18.159619989581874, 0.007699539014858319, 0.005226336617243524],
    [1.5, 2.0, -39.8224785841232, 3.764332532740576, 0.013875320557154687, 0.0014991934303202282],
    [1.5, 2.0, -40.0, 0.0, 0.014029829672879105, 0.0],
    [1.5, 2.0, 150.0, 0.0, 43031241223.76711, 0.0],
    [1.5, 2.0, 121.3525491562421, 88.16778784387097, 255272186.3449694, -3739292423.8248506],
    [1.5, 2.0, 23.465169756034626, 148.15325108927067, -378314.35282307037, 35743.83414173456],
    [1.5, 2.0, -23.46516975603465, 148.15325108927067, 2016.7540567752212, -1086.8289713176425],
    [1.5, 2.0, -88.16778784387095, 121.35254915624212, 0.04423396174863939, 0.45269306113365393],
    [1.5, 2.0, -133.6509786282552, 68.09857496093203, 0.0034022168353878544, 0.0017502925437835018],
    [1.5, 2.0, -149.334294690462, 14.11624699777716, 0.003744243009932827, 0.0003537973873113754],
    [1.5, 2.0, -150.0, 0.0, 0.003760918933461329, 0.0],
    [1.5, 2.0, 400.0, 0.0, 4.6380340152616286e+21, 0.0],
    [1.5, 2.0, 323.60679774997897, 235.11410091698926, -4.0183522368393175e+19, 1.371742110884324e+19],
    [1.5, 2.0, 62.573786016092335, 395.0753362380551, 475356051287.1683, -747826877662.8418],
    [1.5, 2.0, -62.573786016092406, 395.07533623805506, -11890959.611448502, -46235759.983158894],
    [1.5, 2.0, -235.1141009169892, 323.606797749979, -2.2730602612409574, 2.7641200647165998],
    [1.5, 2.0, -356.40260967534715, 181.59619989581873, 0.0012568146411121677, 0.00064045943540831],
    [1.5, 2.0, -398.224785841232, 37.64332532740576, 0.001404198360434609, 0.0001327327180603253],
    [1.5, 2.0, -400.0, 0.0, 0.0014104574388271937, 0.0],
    [1.5, 2.0, 900.0, 0.0, 2.1778686052385682e+38, 0.0],
    [1.5, 2.0, 728.1152949374526, 529.0067270632259, 6.745400799285387e+34, -1.390067458033536e+34],
    [1.5, 2.0, 140.79101853620776, 888.919506535624, 2.683180391966867e+21, -3.5722809355408276e+21],
    [1.5, 2.0, -140.7910185362079, 888.9195065356239, -143190314092574.94, 152531283791238.53],
    [1.5, 2.0, -529.0067270632258, 728.1152949374527, -120.83381495882536, -16.296184690568754],
    [1.5, 2.0, -801.905871769531, 408.5914497655922, 0.0005585515541683217, 0.00028459493953278235],
    [1.5, 2.0, -896.005768142772, 84.69748198666296, 0.0006240938179906725, 5.89939620023279e-05],
    [1.5, 2.0, -900.0, 0.0, 0.0006268758641032749, 0.0],
    [1.5, 1.5, 0.5, 0.0, 1.4009479593700924, 0.0],
    [1.5, 1.5, 0.4045084971874737, 0.29389262614623657, 1.3369253981521256, 0.16839761804062459],
    [1.5, 1.5, 0.07821723252011542, 0.4938441702975689, 1.1466014402356899, 0.25261656304054697],
    [1.5, 1.5, -0.0782172325201155, 0.49384417029756883, 1.0693289255197689, 0.23937243957292043],
    [1.5, 1.5, -0.2938926261462365, 0.4045084971874737, 0.9757548450063621, 0.18215400914180577],
    [1.5, 1.5, -0.4455032620941839, 0.22699524986977343, 0.9180880285298223, 0.09710709446716041],
    [1.5, 1.5, -0.49778098230154, 0.047054156659257204, 0.8996309830439063, 0.01977836858133344],
    [1.5, 1.5, -0.5, 0.0, 0.8988630755460688, 0.0],
    [1.5, 1.5, 7.0, 0.0, 13.527602952287792, 0.0],
    [1.5, 1.5, 5.663118960624632, 4.114496766047312, 2.834660695744977, 9.452190693433106],
    [1.5, 1.5, 1.0950412552816158, 6.913818384165964, -2.3733038443799614, 1.8239926467246403],
    [1.5, 1.5, -1.095041255281617, 6.913818384165964, -1.4266717986720636, 0.5671531414877397],
    [1.5, 1.5, -4.114496766047311, 5.663118960624632, -0.4846221875785966, 0.11030299774944868],
    [1.5, 1.5, -6.237045669318575, 3.177933498176828, -0.1437933295691408, 0.044795710216565254],
    [1.5, 1.5, -6.96893375222156, 0.6587581932296008, -0.0678128750787804, 0.009385335203958298],
    [1.5, 1.5, -7.0, 0.0, -0.06494421720286599, 0.0],
    [1.5, 1.5, 14.9, 0.0, 115.49257761508385, 0.0],
    [1.5, 1.5, 12.054353216186717, 8.75800025915785, -43.16416623276027, 53.093883329478146],
    [1.5, 1.5, 2.3308735290994393, 14.716556274867553, -2.6734857366809868, -9.133509833127897],
    [1.5, 1.5, -2.330873529099442, 14.716556274867552, 0.7683890544534159, -3.0869219009077953],
    [1.5, 1.5, -8.758000259157848, 12.054353216186717, 0.2789344454615838, -0.4305009827620967],
    [1.5, 1.5, -13.27599721040668, 6.7644584461192485, 0.02021549433277474, -0.07521830269527756],
    [1.5, 1.5, -14.833873272585892, 1.4022138684458647, -0.013637299623800165, -0.010832458018218137],
    [1.5, 1.5, -14.9, 0.0, -0.014645010507512855, 0.0],
    [1.5, 1.5, 40.0, 0.0, 23411.42310208529, 0.0],
    [1.5, 1.5, 32.3606797749979, 23.511410091698927, -1395.6166520672962, -8401.717000899142],
    [1.5, 1.5, 6.257378601609234, 39.50753362380551, -171.14880756389533, 79.25970989268484],
    [1.5, 1.5, -6.25737860160924, 39.50753362380551, -17.587021521287546, -14.343535856677482],
    [1.5, 1.5, -23.51141009169892, 32.3606797749979, -0.06378544416815406, -0.6591466607953764],
    [1.5, 1.5, -35.640260967534715, 18.159619989581874, -0.007503443440299187, -0.01568052587378748],
    [1.5, 1.5, -39.8224785841232, 3.764332532740576, -0.0015466103633098975, -0.0002938207912536635],
    [1.5, 1.5, -40.0, 0.0, -0.0013182418417973865, 0.0],
    [1.5, 1.5, 150.0, 0.0, 228637586145.02072, 0.0],
    [1.5, 1.5, 121.3525491562421, 88.16778784387097, 5457476947.676777, -19151795097.64485],
    [1.5, 1.5, 23.465169756034626, 148.15325108927067, -1877228.419669228, -743346.3301366194],
    [1.5, 1.5, -23.46516975603465, 148.15325108927067, 12131.965278361591, 993.0973388793122],
    [1.5, 1.5, -88.16778784387095, 121.35254915624212, -1.432700628570844, 1.924850041496853],
    [1.5, 1.5, -133.6509786282552, 68.09857496093203, -1.8330371416047795e-05, 0.00033908389349737375],
    [1.5, 1.5, -149.334294690462, 14.11624699777716, -1.8172599222023402e-05, -3.839875099304747e-06],
    [1.5, 1.5, -150.0, 0.0, -1.8803460527269134e-05, 0.0],
    [1.5, 1.5, 400.0, 0.0, 3.4173326807978775e+22, 0.0],
    [1.5, 1.5, 323.60679774997897, 235.11410091698926, -3.106185868551803e+20, 3.73047863843126e+19],
    [1.5, 1.5, 62.573786016092335, 395.0753362380551, 5622212560463.077, -3319397081191.0166],
    [1.5, 1.5, -62.573786016092406, 395.07533623805506, 112062357.37091649, -333425863.26640576],
    [1.5, 1.5, -235.1141009169892, 323.606797749979, -26.072795534807007, 3.918072396661944],
    [1.5, 1.5, -356.40260967534715, 181.59619989581873, -1.970673838490775e-06, -1.084049234254636e-06],
    [1.5, 1.5, -398.224785841232, 37.64332532740576, -2.5971932624231775e-06, -4.953182585957331e-07],
    [1.5, 1.5, -400.0, 0.0, -2.643989047435653e-06, 0.0],
    [1.5, 1.5, 900.0, 0.0, 2.1027090194237065e+39, 0.0],
    [1.5, 1.5, 728.1152949374526, 529.0067270632259, 6.649333968568167e+35, 4.1280982102871285e+33],
    [1.5, 1.5, 140.79101853620776, 888.919506535624, 3.874038554499405e+22, -1.8969811969288683e+22],
    [1.5, 1.5, -140.7910185362079, 888.9195065356239, -1961526788246567.8, 482131258154122.3],
    [1.5, 1.5, -529.0067270632258, 728.1152949374527, -761.7004780903076, -897.5638532070586],
    [1.5, 1.5, -801.905871769531, 408.5914497655922, -3.0724657568147095e-07, -4.2241191682118653e-07],
    [1.5, 1.5, -896.005768142772, 84.69748198666296, -5.131210579911563e-07, -9.787823570181614e-08],
    [1.5, 1.5, -900.0, 0.0, -5.223723766057572e-07, 0.0],
    [1.1, 2.0, 0.5, 0.0, 1.2633089771227537, 0.0],
    [1.1, 2.0, 0.4045084971874737, 0.29389262614623657, 1.1927844779613284, 0.16765903349255373],
    [1.1, 2.0, 0.07821723252011542, 0.4938441702975689, 1.0036698639248995, 0.23161243081175423],
    [1.1, 2.0, -0.0782172325201155, 0.49384417029756883, 0.935443410977974, 0.21199666361779843],
    [1.1, 2.0, -0.2938926261462365, 0.4045084971874737, 0.8592209007334968, 0.15456462138373495],
    [1.1, 2.0, -0.4455032620941839, 0.22699524986977343, 0.8156409598649492, 0.0802236047798042],
    [1.1, 2.0, -0.49778098230154, 0.047054156659257204, 0.8022250124545065, 0.016199510784738688],
    [1.1, 2.0, -0.5, 0.0, 0.8016723528127568, 0.0],
    [1.1, 2.0, 7.0, 0.0, 54.50667455718388, 0.0],
    [1.1, 2.0, 5.663118960624632, 4.114496766047312, -18.556274148407788, 11.182941298894132],
    [1.1, 2.0, 1.0950412552816158, 6.913818384165964, -0.3163465746223866, -0.6237879895006653],
    [1.1, 2.0, -1.095041255281617, 6.913818384165964, -0.04542691904313691, -0.009343155854004317],
    [1.1, 2.0, -4.114496766047311, 5.663118960624632, 0.0632205366611102, 0.10874147256543946],
    [1.1, 2.0, -6.237045669318575, 3.177933498176828, 0.12112095495124148, 0.06654834499536155],
    [1.1, 2.0, -6.96893375222156, 0.6587581932296008, 0.1383901318202506, 0.01379923052764593],
    [1.1, 2.0, -7.0, 0.0, 0.13909416227227875, 0.0],
    [1.1, 2.0, 14.9, 0.0, 8995.280681631608, 0.0],
    [1.1, 2.0, 12.054353216186717, 8.75800025915785, 1203.2670150718493, -742.558864539043],
    [1.1, 2.0, 2.3308735290994393, 14.716556274867553, -1.8622450641931354, -0.8869429956627668],
    [1.1, 2.0, -2.330873529099442, 14.716556274867552, -0.052552897977287474, 0.014362872475495708],
    [1.1, 2.0, -8.758000259157848, 12.054353216186717, 0.03615771425453163, 0.05200794577580095],
    [1.1, 2.0, -13.27599721040668, 6.7644584461192485, 0.05642145032510694, 0.02923886436604021],
    [1.1, 2.0, -14.833873272585892, 1.4022138684458647, 0.06339688274541118, 0.006092943832359987],
    [1.1, 2.0, -14.9, 0.0, 0.06369619388140353, 0.0],
    [1.1, 2.0, 40.0, 0.0, 84043211572.5445, 0.0],
    [1.1, 2.0, 32.3606797749979, 23.511410091698927, -614830154.6942971, 652323354.6110661],
    [1.1, 2.0, 6.257378601609234, 39.50753362380551, 51.98143728772227, 85.9775689633066],
    [1.1, 2.0, -6.25737860160924, 39.50753362380551, -0.006716093064942215, 0.05321218312336174],
    [1.1, 2.0, -23.51141009169892, 32.3606797749979, 0.013713096398031312, 0.019029642268562002],
    [1.1, 2.0, -35.640260967534715, 18.159619989581874, 0.020908327265044442, 0.010712726867811202],
    [1.1, 2.0, -39.8224785841232, 3.764332532740576, 0.023400980458051942, 0.0022231913526507222],
    [1.1, 2.0, -40.0, 0.0, 0.02350692367528524, 0.0],
    [1.1, 2.0, 150.0, 0.0, 1.9487765671721938e+39, 0.0],
    [1.1, 2.0, 121.3525491562421, 88.16778784387097, 4.488686023133021e+32, 2.993979760933358e+32],
    [1.1, 2.0, 23.465169756034626, 148.15325108927067, -1788095556.3400233, 3750352026.696719],
    [1.1, 2.0, -23.46516975603465, 148.15325108927067, 0.008277815974282569, 6.017420946591428e-06],
    [1.1, 2.0, -88.16778784387095, 121.35254915624212, 0.003664467427770937, 0.005054360312164694],
    [1.1, 2.0, -133.6509786282552, 68.09857496093203, 0.005563067380553465, 0.0028384974921341994],
    [1.1, 2.0, -149.334294690462, 14.11624699777716, 0.006218424960859984, 0.0005885532183098988],
    [1.1, 2.0, -150.0, 0.0, 0.006246250657048321, 0.0],
    [1.1, 2.0, 400.0, 0.0, 2.2610643339276764e+98, 0.0],
    [1.1, 2.0, 323.60679774997897, 235.11410091698926, 1.591522200697708e+82, -1.639157142889846e+82],
    [1.1, 2.0, 62.573786016092335, 395.0753362380551, 1.4704143887582477e+25, 9.454153079466137e+25],
    [1.1, 2.0, -62.573786016092406, 395.07533623805506, -0.001397660933739012, -0.0011885033783285179],
    [1.1, 2.0, -235.1141009169892, 323.606797749979, 0.0013747560529606122, 0.0018936747721451674],
    [1.1, 2.0, -356.40260967534715, 181.59619989581873, 0.002085094175196694, 0.0010629599117000217],
    [1.1, 2.0, -398.224785841232, 37.64332532740576, 0.0023301234493931424, 0.0002203639014704564],
    [1.1, 2.0, -400.0, 0.0, 0.0023405252036989375, 0.0],
    [1.1, 2.0, 900.0, 0.0, 7.471270412451601e+207, 0.0],
    [1.1, 2.0, 728.1152949374526, 529.0067270632259, -1.829223832514259e+174, -2.0702166366898287e+174],
    [1.1, 2.0, 140.79101853620776, 888.919506535624, 2.32023130985553e+56, -3.302258190801405e+56],
    [1.1, 2.0, -140.7910185362079, 888.9195065356239, 0.0018500482794217982, 0.00021060795094427552],
    [1.1, 2.0, -529.0067270632258, 728.1152949374527, 0.000611086215781681, 0.0008413805943252938],
    [1.1, 2.0, -801.905871769531, 408.5914497655922, 0.0009265524406846172, 0.00047221048636130695],
    [1.1, 2.0, -896.005768142772, 84.69748198666296, 0.0010353483923923276, 9.78893637733653e-05],
    [1.1, 2.0, -900.0, 0.0, 0.0010399666310832738, 0.0],
    [1.1, 1.1, 0.5, 0.0, 1.6117257564646494, 0.0],
    [1.1, 1.1, 0.4045084971874737, 0.29389262614623657, 1.4421875319847783, 0.36776915801652454],
    [1.1, 1.1, 0.07821723252011542, 0.4938441702975689, 1.0289507960536173, 0.46538271801605535],
    [1.1, 1.1, -0.0782172325201155, 0.49384417029756883, 0.8980399811983039, 0.40919873465553147],
    [1.1, 1.1, -0.2938926261462365, 0.4045084971874737, 0.7663765450874878, 0.28295451738537436],
    [1.1, 1.1, -0.4455032620941839, 0.22699524986977343, 0.6993179472659803, 0.14175743308267574],
    [1.1, 1.1, -0.49778098230154, 0.047054156659257204, 0.6800545199600959, 0.02828862684463206],
    [1.1, 1.1, -0.5, 0.0, 0.6792758477727727, 0.0],
    [1.1, 1.1, 7.0, 0.0, 268.49266042360756, 0.0],
    [1.1, 1.1, 5.663118960624632, 4.114496766047312, -105.78338629930958, 2.9461552334518806],
    [1.1, 1.1, 1.0950412552816158, 6.913818384165964, 2.8155476184430572, -2.8066834401470957],
    [1.1, 1.1, -1.095041255281617, 6.913818384165964, 0.6409441647948824, -0.41390976766817306],
    [1.1, 1.1, -4.114496766047311, 5.663118960624632, 0.029316981821697112, -0.062154640457336416],
    [1.1, 1.1, -6.237045669318575, 3.177933498176828, -0.008069807157710888, -0.007399548222065861],
    [1.1, 1.1, -6.96893375222156, 0.6587581932296008, -0.004575804559879091, -0.0002334086775844782],
    [1.1, 1.1, -7.0, 0.0, -0.00433791875048573, 0.0],
    [1.1, 1.1, 14.9, 0.0, 82015.7744253432, 0.0],
    [1.1, 1.1, 12.054353216186717, 8.75800025915785, 12882.619036711947, -500.5633053618775],
    [1.1, 1.1, 2.3308735290994393, 14.716556274867553, 1.1251782218373796, -18.936431449888815],
    [1.1, 1.1, -2.330873529099442, 14.716556274867552, 0.3432069630479211, -0.6231010499537213],
    [1.1, 1.1, -8.758000259157848, 12.054353216186717, -0.0028364141029669585, -0.005090291951143596],
    [1.1, 1.1, -13.27599721040668, 6.7644584461192485, -0.00020525558428032724, -0.0004703308053784472],
    [1.1, 1.1, -14.833873272585892, 1.4022138684458647, -0.0006707445288516152, -0.00017451819769079643],
    [1.1, 1.1, -14.9, 0.0, -0.0006983328371394561, 0.0],
    [1.1, 1.1, 40.0, 0.0, 1719012348469.6912, 0.0],
    [1.1, 1.1, 32.3606797749979, 23.511410091698927, -17511202850.15537, 5434108526.528283],
    [1.1, 1.1, 6.257378601609234, 39.50753362380551, -1181.6402823363946, 1680.8538992288807],
    [1.1, 1.1, -6.25737860160924, 39.50753362380551, -0.6404198995103805, -0.1112891209036635],
    [1.1, 1.1, -23.51141009169892, 32.3606797749979, 3.0795287018209214e-05, -5.986347459097099e-05],
    [1.1, 1.1, -35.640260967534715, 18.159619989581874, -3.85286304944516e-05, -5.999302563654888e-05],
    [1.1, 1.1, -39.8224785841232, 3.764332532740576, -7.09687592069053e-05, -1.443518523838538e-05],
    [1.1, 1.1, -40.0, 0.0, -7.247124860925581e-05, 0.0],
    [1.1, 1.1, 150.0, 0.0, 1.1754396918265498e+41, 0.0],
    [1.1, 1.1, 121.3525491562421, 88.16778784387097, 1.4694785222131255e+34, 2.903790053547845e+34],
    [1.1, 1.1, 23.465169756034626, 148.15325108927067, -250485991304.479, -7712698723.317506],
    [1.1, 1.1, -23.46516975603465, 148.15325108927067, 0.4358279811963749, 0.377333822094827],
    [1.1, 1.1, -88.16778784387095, 121.35254915624212, 1.5451639001339627e-06, -4.389700133897104e-06],
    [1.1, 1.1, -133.6509786282552, 68.09857496093203, -2.708564708638941e-06, -3.8383202786246345e-06],
    [1.1, 1.1, -149.334294690462, 14.11624699777716, -4.627277902993042e-06, -8.964873869541153e-07],
    [1.1, 1.1, -150.0, 0.0, -4.713984899356716e-06, 0.0],
    [1.1, 1.1, 400.0, 0.0, 3.042783791766184e+100, 0.0],
    [1.1, 1.1, 323.60679774997897, 235.11410091698926, 2.9496254662591346e+84, -8.675734828371155e+83],
    [1.1, 1.1, 62.573786016092335, 395.0753362380551, -1.0851076340880815e+28, 6.930941260589907e+27],
    [1.1, 1.1, -62.573786016092406, 395.07533623805506, 0.4280315854091467, -0.30794991372133956],
    [1.1, 1.1, -235.1141009169892, 323.606797749979, 2.0561687849600152e-07, -6.139962596484488e-07],
    [1.1, 1.1, -356.40260967534715, 181.59619989581873, -3.7923044030177343e-07, -5.275640056985346e-07],
    [1.1, 1.1, -398.224785841232, 37.64332532740576, -6.388412905926573e-07, -1.225617678379821e-07],
    [1.1, 1.1, -400.0, 0.0, -6.505245209023213e-07, 0.0],
    [1.1, 1.1, 900.0, 0.0, 1.9520995579745306e+210, 0.0],
    [1.1, 1.1, 728.1152949374526, 529.0067270632259, -1.5018310879649986e+176, -7.06012771885795e+176],
    [1.1, 1.1, 140.79101853620776, 888.919506535624, 1.0338215607262914e+59, 2.0780455896279925e+58],
    [1.1, 1.1, -140.7910185362079, 888.9195065356239, 0.27966391071483726, 0.4021385485640814],
    [1.1, 1.1, -529.0067270632258, 728.1152949374527, 3.9864681730336e-08, -1.210514478962742e-07],
    [1.1, 1.1, -801.905871769531, 408.5914497655922, -7.47926026005811e-08, -1.0342851126437629e-07],
    [1.1, 1.1, -896.005768142772, 84.69748198666296, -1.2543076708380862e-07, -2.3987469580315298e-08],
    [1.1, 1.1, -900.0, 0.0, -1.2770667037314476e-07, 0.0],
    [1.75, 2.0, 0.5, 0.0, 1.1179317036852763, 0.0],
    [1.75, 2.0, 0.4045084971874737, 0.29389262614623657, 1.0928971526920293, 0.07109286824909578],
    [1.75, 2.0, 0.07821723252011542, 0.4938441702975689, 1.0130939540370407, 0.1130325917219072],
    [1.75, 2.0, -0.0782172325201155, 0.49384417029756883, 0.977823666240619, 0.11008255483584778],
    [1.75, 2.0, -0.2938926261462365, 0.4045084971874737, 0.9321790917211682, 0.08694780944503734],
    [1.75, 2.0, -0.4455032620941839, 0.22699524986977343, 0.9020654996522436, 0.047563052770565925],
    [1.75, 2.0, -0.49778098230154, 0.047054156659257204, 0.8920451028085176, 0.009773192021717201],
    [1.75, 2.0, -0.5, 0.0, 0.8916238129708856, 0.0],
    [1.75, 2.0, 7.0, 0.0, 3.8844438614937506, 0.0],
    [1.75, 2.0, 5.663118960624632, 4.114496766047312, 2.420722510657689, 2.1373401508586736],
    [1.75, 2.0, 1.0950412552816158, 6.913818384165964, 0.27597255897037254, 1.5594595413607846],
    [1.75, 2.0, -1.095041255281617, 6.913818384165964, 0.038733174046079184, 1.0495160624423632],
    [1.75, 2.0, -4.114496766047311, 5.663118960624632, 0.015262707055481195, 0.5090136680842225],
    [1.75, 2.0, -6.237045669318575, 3.177933498176828, 0.08038712349076424, 0.20334001466754895],
    [1.75, 2.0, -6.96893375222156, 0.6587581932296008, 0.10748903909621887, 0.03778108968939439],
    [1.75, 2.0, -7.0, 0.0, 0.10865524851418042, 0.0],
    [1.75, 2.0, 14.9, 0.0, 13.154666360980693, 0.0],
    [1.75, 2.0, 12.054353216186717, 8.75800025915785, 2.730972951246607, 9.393609737035392],
    [1.75, 2.0, 2.3308735290994393, 14.716556274867553, -2.619234767421402, 1.6820682701377712],
    [1.75, 2.0, -2.330873529099442, 14.716556274867552, -1.5634281939308914, 0.3718646148977547],
    [1.75, 2.0, -8.758000259157848, 12.054353216186717, -0.5044007720652444, -0.018853838385376295],
    [1.75, 2.0, -13.27599721040668, 6.7644584461192485, -0.14130029188344076, -0.005861113273427184],
    [1.75, 2.0, -14.833873272585892, 1.4022138684458647, -0.0659686367629485, 0.00031143490817899455],
    [1.75, 2.0, -14.9, 0.0, -0.06319314148315926, 0.0],
    [1.75, 2.0, 40.0, 0.0, 260.7650579475502, 0.0],
    [1.75, 2.0, 32.3606797749979, 23.511410091698927, -126.60434776399252, 88.18487581523598],
    [1.75, 2.0, 6.257378601609234, 39.50753362380551, 8.533414917381338, -18.63902376377713],
    [1.75, 2.0, -6.25737860160924, 39.50753362380551, 5.956941764562483, -2.518438354734171],
    [1.75, 2.0, -23.51141009169892, 32.3606797749979, 0.850796022168909, 0.25679529842412563],
    [1.75, 2.0, -35.640260967534715, 18.159619989581874, 0.09858904022894516, 0.044578205007751434],
    [1.75, 2.0, -39.8224785841232, 3.764332532740576, 0.030803200678736663, 0.003665705554404528],
    [1.75, 2.0, -40.0, 0.0, 0.028862360740874417, 0.0],
    [1.75, 2.0, 150.0, 0.0, 1322468.5492819503, 0.0],
    [1.75, 2.0, 121.3525491562421, 88.16778784387097, 382486.0310219336, -202490.13725751196],
    [1.75, 2.0, 23.465169756034626, 148.15325108927067, 4466.818604976127, -3858.0295511765507],
    [1.75, 2.0, -23.46516975603465, 148.15325108927067, 244.91200124537733, 443.45079571537815],
    [1.75, 2.0, -88.16778784387095, 121.35254915624212, -6.982029971418854, 2.1933040240174786],
    [1.75, 2.0, -133.6509786282552, 68.09857496093203, -0.06742599072204898, -0.018025565299960994],
    [1.75, 2.0, -149.334294690462, 14.11624699777716, -2.7704481899888095e-05, 0.00030399365369139405],
    [1.75, 2.0, -150.0, 0.0, 0.0006148527869222357, 0.0],
    [1.75, 2.0, 400.0, 0.0, 393850911660.5392, 0.0],
    [1.75, 2.0, 323.60679774997897, 235.11410091698926, -30208615833.252544, -46764576081.03105],
    [1.75, 2.0, 62.573786016092335, 395.0753362380551, -24471567.400550403, 17537002.037667956],
    [1.75, 2.0, -62.573786016092406, 395.07533623805506, 355637.63638921763, -200456.23278798998],
    [1.75, 2.0, -235.1141009169892, 323.606797749979, -229.41336399296193, 83.77786519502871],
    [1.75, 2.0, -356.40260967534715, 181.59619989581873, -0.047999284406877694, -0.055182613836561596],
    [1.75, 2.0, -398.224785841232, 37.64332532740576, 0.0005811096840410755, 3.96037693677179e-05],
    [1.75, 2.0, -400.0, 0.0, 0.0006470553372285291, 0.0],
    [1.75, 2.0, 900.0, 0.0, 1.7728572577593002e+19, 0.0],
    [1.75, 2.0, 728.1152949374526, 529.0067270632259, -3.80446240385036e+17, -6.93419358348785e+17],
    [1.75, 2.0, 140.79101853620776, 888.919506535624, -5040903262916.972, 586373347113.8912],
    [1.75, 2.0, -140.7910185362079, 888.9195065356239, -2340670523.5065436, 4926525188.739084],
    [1.75, 2.0, -529.0067270632258, 728.1152949374527, 17063.47990792197, 37381.66167225038],
    [1.75, 2.0, -801.905871769531, 408.5914497655922, -0.10395999788957129, -0.007116629655966073],
    [1.75, 2.0, -896.005768142772, 84.69748198666296, 0.00030253282447462675, 3.087455888359533e-05],
    [1.75, 2.0, -900.0, 0.0, 0.0003058530046199493, 0.0],
    [1.75, 1.75, 0.5, 0.0, 1.2457920145690193, 0.0],
    [1.75, 1.75, 0.4045084971874737, 0.29389262614623657, 1.2119204974621771, 0.09535171707999765],
    [1.75, 1.75, 0.07821723252011542, 0.4938441702975689, 1.1047718042935384, 0.15063603967235564],
    [1.75, 1.75, -0.0782172325201155, 0.49384417029756883, 1.0578580965246442, 0.14625114128742928],
    [1.75, 1.75, -0.2938926261462365, 0.4045084971874737, 0.9976016156289266, 0.11501979257719691],
    [1.75, 1.75, -0.4455032620941839, 0.22699524986977343, 0.9581581055574873, 0.0627281432693346],
    [1.75, 1.75, -0.49778098230154, 0.047054156659257204, 0.9450922827969078, 0.01287573119219097],
    [1.75, 1.75, -0.5, 0.0, 0.9445436259690853, 0.0],
    [1.75, 1.75, 7.0, 0.0, 5.180232318807008, 0.0],
    [1.75, 1.75, 5.663118960624632, 4.114496766047312, 2.976789790139357, 3.073086275114193],
    [1.75, 1.75, 1.0950412552816158, 6.913818384165964, -0.030788697120833416, 2.0380914993981785],
    [1.75, 1.75, -1.095041255281617, 6.913818384165964, -0.2779735391755956, 1.2945820060509634],
    [1.75, 1.75, -4.114496766047311, 5.663118960624632, -0.20774045017374487, 0.5734664800028146],
    [1.75, 1.75, -6.237045669318575, 3.177933498176828, -0.06745426255238422, 0.2145706825902744],
    [1.75, 1.75, -6.96893375222156, 0.6587581932296008, -0.0171938960122769, 0.039028202142048],
    [1.75, 1.75, -7.0, 0.0, -0.01508731620612895, 0.0],
    [1.75, 1.75, 14.9, 0.0, 19.377542331135224, 0.0],
    [1.75, 1.75, 12.054353216186717, 8.75800025915785, 2.7865251282720234, 14.107832114743927],
    [1.75, 1.75, 2.3308735290994393, 14.716556274867553, -4.260986113739547, 1.6235142076009605],
    [1.75, 1.75, -2.330873529099442, 14.716556274867552, -2.362728644748164, -0.061480264494585594],
    [1.75, 1.75, -8.758000259157848, 12.054353216186717, -0.7121630752554157, -0.2828627960441746],
    [1.75, 1.75, -13.27599721040668, 6.7644584461192485, -0.22200769005290688, -0.0955987977913782],
    [1.75, 1.75, -14.833873272585892, 1.4022138684458647, -0.13059886270744503, -0.014896691264865005],
    [1.75, 1.75, -14.9, 0.0, -0.12733540382174124, 0.0],
    [1.75, 1.75, 40.0, 0.0, 441.69937357598934, 0.0],
    [1.75, 1.75, 32.3606797749979, 23.511410091698927, -226.96008362155322, 129.53866678579072],
    [1.75, 1.75, 6.257378601609234, 39.50753362380551, 20.496954574259657, -28.041187266671006],
    [1.75, 1.75, -6.25737860160924, 39.50753362380551, 10.827130710429339, -1.6827268106372748],
    [1.75, 1.75, -23.51141009169892, 32.3606797749979, 1.2325479838706075, 0.8483381213207011],
    [1.75, 1.75, -35.640260967534715, 18.159619989581874, 0.12096007345202703, 0.12264442558983754],
    [1.75, 1.75, -39.8224785841232, 3.764332532740576, 0.03691746680410395, 0.011517083030900176],
    [1.75, 1.75, -40.0, 0.0, 0.03457925918060653, 0.0],
    [1.75, 1.75, 150.0, 0.0, 2705549.804703885, 0.0],
    [1.75, 1.75, 121.3525491562421, 88.16778784387097, 816486.4929470553, -342450.3267928136],
    [1.75, 1.75, 23.465169756034626, 148.15325108927067, 10535.861614501357, -5899.40870578525],
    [1.75, 1.75, -23.46516975603465, 148.15325108927067, 264.1902953426861, 1002.1505893435371],
    [1.75, 1.75, -88.16778784387095, 121.35254915624212, -14.97273557616192, -0.15006310235535283],
    [1.75, 1.75, -133.6509786282552, 68.09857496093203, -0.11678273442084677, -0.08839948625167666],
    [1.75, 1.75, -149.334294690462, 14.11624699777716, -0.0038478753975415923, -0.0009809612075942344],
    [1.75, 1.75, -150.0, 0.0, -0.0027211197554345757, 0.0],
    [1.75, 1.75, 400.0, 0.0, 926946589699.9835, 0.0],
    [1.75, 1.75, 323.60679774997897, 235.11410091698926, -60945239308.99611, -115992664266.03928],
    [1.75, 1.75, 62.573786016092335, 395.0753362380551, -64703545.36051697, 28882332.199680697],
    [1.75, 1.75, -62.573786016092406, 395.07533623805506, 926915.3694061688, -252967.84447221903],
    [1.75, 1.75, -235.1141009169892, 323.606797749979, -574.4397767505725, 20.674030970146646],
    [1.75, 1.75, -356.40260967534715, 181.59619989581873, -0.05756375631734234, -0.1638142498577859],
    [1.75, 1.75, -398.224785841232, 37.64332532740576, -0.0002016790882038944, -0.00014853377146529197],
    [1.75, 1.75, -400.0, 0.0, -9.315970465782136e-05, 0.0],
    [1.75, 1.75, 900.0, 0.0, 4.684987255681549e+19, 0.0],
    [1.75, 1.75, 728.1152949374526, 529.0067270632259, -8.370683572835292e+17, -1.915187767393402e+18],
    [1.75, 1.75, 140.79101853620776, 888.919506535624, -13361267332991.188, -1154022176408.4968],
    [1.75, 1.75, -140.7910185362079, 888.9195065356239, -9179067254.333055, 11112953733.49316],
    [1.75, 1.75, -529.0067270632258, 728.1152949374527, 12358.910446399568, 107884.88490542484],
    [1.75, 1.75, -801.905871769531, 408.5914497655922, -0.2485091949579786, -0.12034256142701479],
    [1.75, 1.75, -896.005768142772, 84.69748198666296, -7.776982492868246e-06, 2.7108888706898616e-06],
    [1.75, 1.75, -900.0, 0.0, -1.1640669620384972e-06, 0.0],
    [1.02, 2.0, 0.5, 0.0, 1.2902740496920762, 0.0],
    [1.02, 2.0, 0.4045084971874737, 0.29389262614623657, 1.2089069066921394, 0.18671376586288865],
    [1.02, 2.0, 0.07821723252011542, 0.4938441702975689, 0.9989453707439734, 0.2501520468463856],
    [1.02, 2.0, -0.0782172325201155, 0.49384417029756883, 0.926432639844047, 0.22619800513857496],
    [1.02, 2.0, -0.2938926261462365, 0.4045084971874737, 0.8476682583907768, 0.16256538633613565],
    [1.02, 2.0, -0.4455032620941839, 0.22699524986977343, 0.8037634208109858, 0.08365407591596456],
    [1.02, 2.0, -0.49778098230154, 0.047054156659257204, 0.7904188359651096, 0.01684668719051483],
    [1.02, 2.0, -0.5, 0.0, 0.7898708689289842, 0.0],
    [1.02, 2.0, 7.0, 0.0, 122.63871273226906, 0.0],
    [1.02, 2.0, 5.663118960624632, 4.114496766047312, -35.3734589789739, -4.721797868547189],
    [1.02, 2.0, 1.0950412552816158, 6.913818384165964, 0.228727086698701, -0.2952235507031549],
    [1.02, 2.0, -1.095041255281617, 6.913818384165964, 0.03890719824167815, 0.07842296363917041],
    [1.02, 2.0, -4.114496766047311, 5.663118960624632, 0.07919171215176474, 0.11384361923147138],
    [1.02, 2.0, -6.237045669318575, 3.177933498176828, 0.1265058093118229, 0.06526729744369744],
    [1.02, 2.0, -6.96893375222156, 0.6587581932296008, 0.14152324915913128, 0.013431246242697273],
    [1.02, 2.0, -7.0, 0.0, 0.14214170545140042, 0.0],
    [1.02, 2.0, 14.9, 0.0, 95141.41024039494, 0.0],
    [1.02, 2.0, 12.054353216186717, 8.75800025915785, 2129.396860843403, 6757.495853879128],
    [1.02, 2.0, 2.3308735290994393, 14.716556274867553, 0.9186268672056941, 0.008068769098037254],
    [1.02, 2.0, -2.330873529099442, 14.716556274867552, 0.02208234931493185, 0.06268293683720841],
    [1.02, 2.0, -8.758000259157848, 12.054353216186717, 0.03888083182681761, 0.05381973026028317],
    [1.02, 2.0, -13.27599721040668, 6.7644584461192485, 0.05919707194424988, 0.030273560267998385],
    [1.02, 2.0, -14.833873272585892, 1.4022138684458647, 0.06622237659102156, 0.006281558154738952],
    [1.02, 2.0, -14.9, 0.0, 0.06652100435939823, 0.0],
    [1.02, 2.0, 40.0, 0.0, 380522969601097.94, 0.0],
    [1.02, 2.0, 32.3606797749979, 23.511410091698927, -181661324555.7792, 364834416499.22845],
    [1.02, 2.0, 6.257378601609234, 39.50753362380551, -19.815314772433496, -14.47663047834536],
    [1.02, 2.0, -6.25737860160924, 39.50753362380551, 0.003628648376711953, 0.024237145662556633],
    [1.02, 2.0, -23.51141009169892, 32.3606797749979, 0.014512639754480966, 0.020010089524414874],
    [1.02, 2.0, -35.640260967534715, 18.159619989581874, 0.022026639336503447, 0.011236514521062835],
    [1.02, 2.0, -39.8224785841232, 3.764332532740576, 0.024620153617811315, 0.002329797571968701],
    [1.02, 2.0, -40.0, 0.0, 0.02473027027128665, 0.0],
    [1.02, 2.0, 150.0, 0.0, 8.058205595225173e+56, 0.0],
    [1.02, 2.0, 121.3525491562421, 88.16778784387097, -9.326989532703709e+45, 6.375161086651299e+45],
    [1.02, 2.0, 23.465169756034626, 148.15325108927067, 485346911.7027147, 158535923.0548545],
    [1.02, 2.0, -23.46516975603465, 148.15325108927067, 0.0010289258728854028, 0.006507369421242743],
    [1.02, 2.0, -88.16778784387095, 121.35254915624212, 0.003871750911858177, 0.005331425332295521],
    [1.02, 2.0, -133.6509786282552, 68.09857496093203, 0.005870936008767443, 0.0029922921308410547],
    [1.02, 2.0, -149.334294690462, 14.11624699777716, 0.006560442288196318, 0.0006203118882400366],
    [1.02, 2.0, -150.0, 0.0, 0.00658971135353773, 0.0],
    [1.02, 2.0, 400.0, 0.0, 7.998780875866535e+151, 0.0],
    [1.02, 2.0, 323.60679774997897, 235.11410091698926, -2.5428361200829172e+123, -2.029095205730721e+123],
    [1.02, 2.0, 62.573786016092335, 395.0753362380551, -5.850870898058878e+25, 3.1599847808303734e+25],
    [1.02, 2.0, -62.573786016092406, 395.07533623805506, 0.0003862364266228895, 0.0024401430182503206],
    [1.02, 2.0, -235.1141009169892, 323.606797749979, 0.0014520379003598377, 0.001998896056553694],
    [1.02, 2.0, -356.40260967534715, 181.59619989581873, 0.0022013611281891986, 0.0011217747017612091],
    [1.02, 2.0, -398.224785841232, 37.64332532740576, 0.0024597607193729506, 0.00023253908964064918],
    [1.02, 2.0, -400.0, 0.0, 0.0024707291756905373, 0.0],
    [1.02, 2.0, 140.79101853620776, 888.919506535624, 8.874919698060368e+59, -8.428825940346302e+57],
    [1.02, 2.0, -140.7910185362079, 888.9195065356239, 0.00017171807710220227, 0.0010844896990482111],
    [1.02, 2.0, -529.0067270632258, 728.1152949374527, 0.0006453691194817594, 0.0008883408532020956],
    [1.02, 2.0, -801.905871769531, 408.5914497655922, 0.0009783472637490838, 0.00049851746037211],
    [1.02, 2.0, -896.005768142772, 84.69748198666296, 0.0010931674844912387, 0.00010333932268953481],
    [1.02, 2.0, -900.0, 0.0, 0.0010980412732294433, 0.0],
    [1.9, 1.9, 0.5, 0.0, 1.1497715752294133, 0.0],
    [1.9, 1.9, 0.4045084971874737, 0.29389262614623657, 1.126974349358903, 0.06593876918086239],
    [1.9, 1.9, 0.07821723252011542, 0.4938441702975689, 1.053113978908577, 0.10621953940758619],
    [1.9, 1.9, -0.0782172325201155, 0.49384417029756883, 1.0198386261537893, 0.10408981561799892],
    [1.9, 1.9, -0.2938926261462365, 0.4045084971874737, 0.976132845298034, 0.0829114787660095],
    [1.9, 1.9, -0.4455032620941839, 0.22699524986977343, 0.9468658865746216, 0.045621922463392056],
    [1.9, 1.9, -0.49778098230154, 0.047054156659257204, 0.9370454727405099, 0.009393189012938724],
    [1.9, 1.9, -0.5, 0.0, 0.9366316653373554, 0.0],
    [1.9, 1.9, 7.0, 0.0, 3.379377711592771, 0.0],
    [1.9, 1.9, 5.663118960624632, 4.114496766047312, 2.390180219251827, 1.6741948925154952],
    [1.9, 1.9, 1.0950412552816158, 6.913818384165964, 0.5795255122308648, 1.536818257189411],
    [1.9, 1.9, -1.095041255281617, 6.913818384165964, 0.24733799382558003, 1.1427471892270191],
    [1.9, 1.9, -4.114496766047311, 5.663118960624632, 0.08166206232872122, 0.6205706785228526],
    [1.9, 1.9, -6.237045669318575, 3.177933498176828, 0.07954687893690875, 0.2614212498345877],
    [1.9, 1.9, -6.96893375222156, 0.6587581932296008, 0.09122657448157634, 0.04914945213187426],
    [1.9, 1.9, -7.0, 0.0, 0.09182350298547866, 0.0],
    [1.9, 1.9, 14.9, 0.0, 9.232402102777877, 0.0],
    [1.9, 1.9, 12.054353216186717, 8.75800025915785, 3.682679108713598, 6.395255627493228],
    [1.9, 1.9, 2.3308735290994393, 14.716556274867553, -1.6525405086325433, 2.6060764213525935],
    [1.9, 1.9, -2.330873529099442, 14.716556274867552, -1.4343553138723393, 1.1828671737038685],
    [1.9, 1.9, -8.758000259157848, 12.054353216186717, -0.71566153336817, 0.27701368146924255],
    [1.9, 1.9, -13.27599721040668, 6.7644584461192485, -0.29802593801295524, 0.05979115524748569],
    [1.9, 1.9, -14.833873272585892, 1.4022138684458647, -0.1872736908354709, 0.009186483787675195],
    [1.9, 1.9, -14.9, 0.0, -0.18295336332660314, 0.0],
    [1.9, 1.9, 40.0, 0.0, 97.52266199600028, 0.0],
    [1.9, 1.9, 32.3606797749979, 23.511410091698927, -25.694592861678863, 61.71639343306555],
    [1.9, 1.9, 6.257378601609234, 39.50753362380551, -9.501495840766337, -12.196007141284586],
    [1.9, 1.9, -6.25737860160924, 39.50753362380551, -0.20647208436256964, -6.625910623710372],
    [1.9, 1.9, -23.51141009169892, 32.3606797749979, 0.8843947293991248, -1.2182032291499456],
    [1.9, 1.9, -35.640260967534715, 18.159619989581874, 0.2271974368561971, -0.17084588632071984],
    [1.9, 1.9, -39.8224785841232, 3.764332532740576, 0.07516870860379375, -0.0214283105622794],
    [1.9, 1.9, -40.0, 0.0, 0.06984973110194137, 0.0],
    [1.9, 1.9, 150.0, 0.0, 57433.326306906805, 0.0],
    [1.9, 1.9, 121.3525491562421, 88.16778784387097, -12265.592494773548, -23982.154398197574],
    [1.9, 1.9, 23.465169756034626, 148.15325108927067, -1155.2624591273573, 842.8651680250186],
    [1.9, 1.9, -23.46516975603465, 148.15325108927067, -185.3726270520458, -184.84075675437242],
    [1.9, 1.9, -88.16778784387095, 121.35254915624212, 9.250453766592688, -9.742957701487715],
    [1.9, 1.9, -133.6509786282552, 68.09857496093203, 0.4887207001630857, -0.02309302711016452],
    [1.9, 1.9, -149.334294690462, 14.11624699777716, 0.03837991465138199, 0.0005482939949857421],
    [1.9, 1.9, -150.0, 0.0, 0.030665409047190402, 0.0],
    [1.9, 1.9, 400.0, 0.0, 454942790.7478881, 0.0],
    [1.9, 1.9, 323.60679774997897, 235.11410091698926, 66709551.50540012, 109155081.65092231],
    [1.9, 1.9, 62.573786016092335, 395.0753362380551, -811379.0255527656, 463127.8375804234],
    [1.9, 1.9, -62.573786016092406, 395.07533623805506, 20189.13018067621, -50405.043610968314],
    [1.9, 1.9, -235.1141009169892, 323.606797749979, 6.989991736789752, 374.59617567602476],
    [1.9, 1.9, -356.40260967534715, 181.59619989581873, -1.4352521658831532, 0.23132840176161906],
    [1.9, 1.9, -398.224785841232, 37.64332532740576, -0.01553560334699932, 1.9696713674134735e-05],
    [1.9, 1.9, -400.0, 0.0, -0.008820779795486603, 0.0],
    [1.9, 1.9, 900.0, 0.0, 80313126663197.69, 0.0],
    [1.9, 1.9, 728.1152949374526, 529.0067270632259, 4020330581911.407, -10767674045425.182],
    [1.9, 1.9, 140.79101853620776, 888.919506535624, 427507774.3102071, -6102824767.342545],
    [1.9, 1.9, -140.7910185362079, 888.9195065356239, -55707906.64599481, 54851776.04970414],
    [1.9, 1.9, -529.0067270632258, 728.1152949374527, 35116.769740115495, 14898.723891876516],
    [1.9, 1.9, -801.905871769531, 408.5914497655922, -7.000365274634221, 3.2172826423387155],
    [1.9, 1.9, -896.005768142772, 84.69748198666296, -0.0065048020618194815, 0.0007993442915302277],
    [1.9, 1.9, -900.0, 0.0, -0.0020794756646005702, 0.0],
];
