// Generated by tests/fixtures/gen_fixtures.py (mpmath, adaptive precision). Do not edit.

/// (beta, rho, x, E_{beta,rho}(-x))
pub const MITTAG_LEFFLER: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.5, 0.1, 0.50396851133765865662),
    (0.1, 0.5, 0.5, 0.35170429656333216281),
    (0.1, 0.5, 2.0, 0.16318500422722145802),
    (0.1, 0.5, 5.0, 0.078372615301626089453),
    (0.1, 0.5, 10.0, 0.041947084375351056191),
    (0.1, 0.5, 20.0, 0.021732100564682654807),
    (0.1, 0.5, 50.0, 0.0088845006695190183953),
    (0.1, 0.5, 200.0, 0.0022457913395738629551),
    (0.1, 1.0, 0.1, 0.9047657422574315158),
    (0.1, 1.0, 0.5, 0.6543244602880019291),
    (0.1, 1.0, 2.0, 0.32001533595972739937),
    (0.1, 1.0, 5.0, 0.15804238235845182842),
    (0.1, 1.0, 10.0, 0.08569695701065468541),
    (0.1, 1.0, 20.0, 0.044733864007450960005),
    (0.1, 1.0, 50.0, 0.018378057012219195485),
    (0.1, 1.0, 200.0, 0.0046575160590471970744),
    (0.1, 1.5, 0.1, 1.0264883225367451653),
    (0.1, 1.5, 0.5, 0.75357150324503174502),
    (0.1, 1.5, 2.0, 0.37666363235775281248),
    (0.1, 1.5, 5.0, 0.18814300185164659946),
    (0.1, 1.5, 10.0, 0.10255677846400679948),
    (0.1, 1.5, 20.0, 0.053697288094944719467),
    (0.1, 1.5, 50.0, 0.022104060910939338822),
    (0.1, 1.5, 200.0, 0.0056075819139189044868),
    (0.1, 2.0, 0.1, 0.91273463957686515605),
    (0.1, 2.0, 0.5, 0.67624839485469152443),
    (0.1, 2.0, 2.0, 0.34257035018774019048),
    (0.1, 2.0, 5.0, 0.172318550798849077),
    (0.1, 2.0, 10.0, 0.094237588828458266729),
    (0.1, 2.0, 20.0, 0.04943443795261944254),
    (0.1, 2.0, 50.0, 0.020374243028672272458),
    (0.1, 2.0, 200.0, 0.0051720657623374165831),
    (0.1, 3.0, 0.1, 0.45827982990454590881),
    (0.1, 3.0, 0.5, 0.34350439410236916998),
    (0.1, 3.0, 2.0, 0.17700761588498978177),
    (0.1, 3.0, 5.0, 0.089846563793574555977),
    (0.1, 3.0, 10.0, 0.049343288773133167658),
    (0.1, 3.0, 20.0, 0.025947514763377661677),
    (0.1, 3.0, 50.0, 0.010711256230982062077),
    (0.1, 3.0, 200.0, 0.0027213634771242194833),
    (0.25, 0.5, 0.1, 0.49158430293691862931),
    (0.25, 0.5, 0.5, 0.31558274379872313555),
    (0.25, 0.5, 2.0, 0.12449888012586073946),
    (0.25, 0.5, 5.0, 0.053918548703283762212),
    (0.25, 0.5, 10.0, 0.027403716537290045001),
    (0.25, 0.5, 20.0, 0.013766980243722453695),
    (0.25, 0.5, 50.0, 0.0055147256322508551597),
    (0.25, 0.5, 200.0, 0.0013790529882845214085),
    (0.25, 1.0, 0.1, 0.89996132989886404654),
    (0.25, 1.0, 0.5, 0.63767051920039335655),
    (0.25, 1.0, 2.0, 0.29810179369365760367),
    (0.25, 1.0, 5.0, 0.14279894642587369523),
    (0.25, 1.0, 10.0, 0.076237035239721635688),
    (0.25, 1.0, 20.0, 0.039426390446653064471),
    (0.25, 1.0, 50.0, 0.016097508838799057449),
    (0.25, 1.0, 200.0, 0.0040661744322273281112),
    (0.25, 1.5, 0.1, 1.0287595030947772289),
    (0.25, 1.5, 0.5, 0.75720737944324794108),
    (0.25, 1.5, 2.0, 0.37615677408383302964),
    (0.25, 1.5, 5.0, 0.1863644881212023993),
    (0.25, 1.5, 10.0, 0.1010886354844809421),
    (0.25, 1.5, 20.0, 0.052761698542158495533),
    (0.25, 1.5, 50.0, 0.021671692029952264772),
    (0.25, 1.5, 200.0, 0.0054914149109649919704),
    (0.25, 2.0, 0.1, 0.9186861212366385793),
    (0.25, 2.0, 0.5, 0.69144335365297608493),
    (0.25, 2.0, 2.0, 0.35597702781258876799),
    (0.25, 2.0, 5.0, 0.17993246326723105464),
    (0.25, 2.0, 10.0, 0.098533619896991414492),
    (0.25, 2.0, 20.0, 0.051714218935167480209),
    (0.25, 2.0, 50.0, 0.021318622052594122038),
    (0.25, 2.0, 200.0, 0.005412254066850472851),
    (0.25, 3.0, 0.1, 0.46357134315105002449),
    (0.25, 3.0, 0.5, 0.35846665993886681873),
    (0.25, 3.0, 2.0, 0.19288742117759956374),
    (0.25, 3.0, 5.0, 0.10000897631639304709),
    (0.25, 3.0, 10.0, 0.055445092967039178918),
    (0.25, 3.0, 20.0, 0.029311346166156021131),
    (0.25, 3.0, 50.0, 0.012141034633648423846),
    (0.25, 3.0, 200.0, 0.0030900612484276770224),
    (0.5, 0.5, 0.1, 0.47454388555084362275),
    (0.5, 0.5, 0.5, 0.25634441145129334951),
    (0.5, 0.5, 2.0, 0.053398230926744799218),
    (0.5, 0.5, 5.0, 0.010666394882413155097),
    (0.5, 0.5, 10.0, 0.0027796561095304283729),
    (0.5, 0.5, 20.0, 7.026087267299005751e-4),
    (0.5, 0.5, 50.0, 1.1277028156766193889e-4),
    (0.5, 0.5, 200.0, 7.0521053470072111575e-6),
    (0.5, 1.0, 0.1, 0.89645697996912664193),
    (0.5, 1.0, 0.5, 0.61569034419292587487),
    (0.5, 1.0, 2.0, 0.25539567631050574387),
    (0.5, 1.0, 5.0, 0.11070463773306862637),
    (0.5, 1.0, 10.0, 0.056140992743822585858),
    (0.5, 1.0, 20.0, 0.028174348741051319319),
    (0.5, 1.0, 50.0, 0.0112815362653237725),
    (0.5, 1.0, 200.0, 0.0028209126572120463987),
    (0.5, 1.5, 0.1, 1.0354302003087335807),
    (0.5, 1.5, 0.5, 0.76861931161414825026),
    (0.5, 1.5, 2.0, 0.37230216184474712807),
    (0.5, 1.5, 5.0, 0.17785907245338627473),
    (0.5, 1.5, 10.0, 0.094385900725617741414),
    (0.5, 1.5, 20.0, 0.048591282562947434034),
    (0.5, 1.5, 50.0, 0.01977436927469352455),
    (0.5, 1.5, 200.0, 0.004985895436713939768),
    (0.5, 2.0, 0.1, 0.92948966786778993215),
    (0.5, 2.0, 0.5, 0.71951971096272864728),
    (0.5, 2.0, 2.0, 0.37803850262538272291),
    (0.5, 2.0, 5.0, 0.19010401892842525983),
    (0.5, 2.0, 10.0, 0.10339932663698948325),
    (0.5, 2.0, 20.0, 0.053989394226628256993),
    (0.5, 2.0, 50.0, 0.022172095956416380987),
    (0.5, 2.0, 200.0, 0.0056169663582939931706),
    (0.5, 3.0, 0.1, 0.47149456741574370764),
    (0.5, 3.0, 0.5, 0.38258439997826468763),
    (0.5, 3.0, 2.0, 0.22063601468818320536),
    (0.5, 3.0, 5.0, 0.11805471636987202025),
    (0.5, 3.0, 10.0, 0.066259271072737399759),
    (0.5, 3.0, 20.0, 0.035247612388750323106),
    (0.5, 3.0, 50.0, 0.014653924399656067538),
    (0.5, 3.0, 200.0, 0.0037364043144773325961),
    (0.75, 0.5, 0.1, 0.46327049039722020769),
    (0.75, 0.5, 0.5, 0.20043772471309275697),
    (0.75, 0.5, 2.0, -0.034563686662314401974),
    (0.75, 0.5, 5.0, -0.036034073628165468138),
    (0.75, 0.5, 10.0, -0.019917635219723926655),
    (0.75, 0.5, 20.0, -0.010148184289403820142),
    (0.75, 0.5, 50.0, -0.0040771734319743588668),
    (0.75, 0.5, 200.0, -0.0010200152558799011814),
    (0.75, 1.0, 0.1, 0.89833981373612592004),
    (0.75, 1.0, 0.5, 0.60379034509524675559),
    (0.75, 1.0, 2.0, 0.20207848341295445435),
    (0.75, 1.0, 5.0, 0.067923974332643942122),
    (0.75, 1.0, 10.0, 0.030643250976059637773),
    (0.75, 1.0, 20.0, 0.014527522154459504195),
    (0.75, 1.0, 50.0, 0.0056311878629451302351),
    (0.75, 1.0, 200.0, 0.0013861625576875998699),
    (0.75, 1.5, 0.1, 1.044900384804081367),
    (0.75, 1.5, 0.5, 0.78841325325936186518),
    (0.75, 1.5, 2.0, 0.36584268342630120853),
    (0.75, 1.5, 5.0, 0.16078168362535895391),
    (0.75, 1.5, 10.0, 0.081350549594529616118),
    (0.75, 1.5, 20.0, 0.040773768934265451535),
    (0.75, 1.5, 50.0, 0.016319254354354316306),
    (0.75, 1.5, 200.0, 0.0040802185715162792495),
    (0.75, 2.0, 0.1, 0.94071719815476464833),
    (0.75, 2.0, 0.5, 0.75151786730302039495),
    (0.75, 2.0, 2.0, 0.40194300810790095649),
    (0.75, 2.0, 5.0, 0.19664358397713058128),
    (0.75, 2.0, 10.0, 0.10448519294440892361),
    (0.75, 2.0, 20.0, 0.053727288146448962604),
    (0.75, 2.0, 50.0, 0.02183794632362485289),
    (0.75, 2.0, 200.0, 0.0055021830166340953825),
    (0.75, 3.0, 0.1, 0.47822298142357736793),
    (0.75, 3.0, 0.5, 0.40535658676873677703),
    (0.75, 3.0, 2.0, 0.25067093961103206163),
    (0.75, 3.0, 5.0, 0.13781812487252781639),
    (0.75, 3.0, 10.0, 0.077790725930657151017),
    (0.75, 3.0, 20.0, 0.041411492557430372492),
    (0.75, 3.0, 50.0, 0.017207378456036932816),
    (0.75, 3.0, 200.0, 0.0043849431315702491224),
    (0.9, 0.5, 0.1, 0.45965635448400752719),
    (0.9, 0.5, 0.5, 0.17138027546767609782),
    (0.9, 0.5, 2.0, -0.10282482036797025084),
    (0.9, 0.5, 5.0, -0.066346276353700427973),
    (0.9, 0.5, 10.0, -0.030347874573228820497),
    (0.9, 0.5, 20.0, -0.014241829127028770557),
    (0.9, 0.5, 50.0, -0.0054959541461279496709),
    (0.9, 0.5, 200.0, -0.0013505782894263855749),
    (0.9, 1.0, 0.1, 0.90175694244985940329),
    (0.9, 1.0, 0.5, 0.60340549869586096762),
    (0.9, 1.0, 2.0, 0.16352830001693004885),
    (0.9, 1.0, 5.0, 0.034431324804098423905),
    (0.9, 1.0, 10.0, 0.012820606051102102705),
    (0.9, 1.0, 20.0, 0.0057495078161091138828),
    (0.9, 1.0, 50.0, 0.0021753530768569765492),
    (0.9, 1.0, 200.0, 5.2997543888320925892e-4),
    (0.9, 1.5, 0.1, 1.0514759868725549275),
    (0.9, 1.5, 0.5, 0.80490771603316952206),
    (0.9, 1.5, 2.0, 0.36220346588281217922),
    (0.9, 1.5, 5.0, 0.14474048044025213334),
    (0.9, 1.5, 10.0, 0.069683285835014128432),
    (0.9, 1.5, 20.0, 0.034180104731423817856),
    (0.9, 1.5, 50.0, 0.013524229022622003269),
    (0.9, 1.5, 200.0, 0.0033633286392699368863),
    (0.9, 2.0, 0.1, 0.94734318594770067882),
    (0.9, 2.0, 0.5, 0.77245380829774060651),
    (0.9, 2.0, 2.0, 0.41896056446508772132),
    (0.9, 2.0, 5.0, 0.19845803684071396061),
    (0.9, 2.0, 10.0, 0.10264335131060805795),
    (0.9, 2.0, 20.0, 0.051979946729880641298),
    (0.9, 2.0, 50.0, 0.020933665399611778166),
    (0.9, 2.0, 200.0, 0.0052502098857387060528),
    (0.9, 3.0, 0.1, 0.48167679133372793226),
    (0.9, 3.0, 0.5, 0.41810598768954616725),
    (0.9, 3.0, 2.0, 0.27015710800782411597),
    (0.9, 3.0, 5.0, 0.15085822185984861983),
    (0.9, 3.0, 10.0, 0.085033402558534491448),
    (0.9, 3.0, 20.0, 0.045099766831787262145),
    (0.9, 3.0, 50.0, 0.018678651036922556971),
    (0.9, 3.0, 200.0, 0.0047507093262895510815),
    (0.99, 0.5, 0.1, 0.45864199490451320994),
    (0.99, 0.5, 0.5, 0.15674403035296139496),
    (0.99, 0.5, 2.0, -0.15205607144621257084),
    (0.99, 0.5, 5.0, -0.086247133680177150507),
    (0.99, 0.5, 10.0, -0.034048884616643552642),
    (0.99, 0.5, 20.0, -0.015290190311382750894),
    (0.99, 0.5, 50.0, -0.005812661988692681198),
    (0.99, 0.5, 200.0, -0.0014198705767912419927),
    (0.99, 1.0, 0.1, 0.90450358812369841348),
    (0.99, 1.0, 0.5, 0.60608995263141647835),
    (0.99, 1.0, 2.0, 0.13821728069806402584),
    (0.99, 1.0, 5.0, 0.0097680921391741255086),
    (0.99, 1.0, 10.0, 0.0013478638060832072856),
    (0.99, 1.0, 20.0, 5.6162348367495244904e-4),
    (0.99, 1.0, 50.0, 2.0957649900600752844e-4),
    (0.99, 1.0, 200.0, 5.0788286036312322319e-5),
    (0.99, 1.5, 0.1, 1.0556132479386555844),
    (0.99, 1.5, 0.5, 0.8164673039037272204),
    (0.99, 1.5, 2.0, 0.36110700957553089777),
    (0.99, 1.5, 5.0, 0.13213070138365937727),
    (0.99, 1.5, 10.0, 0.060916666370287196534),
    (0.99, 1.5, 20.0, 0.029524535452213705659),
    (0.99, 1.5, 50.0, 0.011620759775985872577),
    (0.99, 1.5, 200.0, 0.0028832699272671799801),
    (0.99, 2.0, 0.1, 0.95120372954428247173),
    (0.99, 2.0, 0.5, 0.78547626239885755921),
    (0.99, 2.0, 2.0, 0.43090282343436372742),
    (0.99, 2.0, 5.0, 0.19867026192755766681),
    (0.99, 2.0, 10.0, 0.10032170157791219714),
    (0.99, 2.0, 20.0, 0.050230465932753007678),
    (0.99, 2.0, 50.0, 0.02010579032268264026),
    (0.99, 2.0, 200.0, 0.0050280232543630198306),
    (0.99, 3.0, 0.1, 0.48354366655387696604),
    (0.99, 3.0, 0.5, 0.42534006275165730003),
    (0.99, 3.0, 2.0, 0.28244158345942089128),
    (0.99, 3.0, 5.0, 0.15929653890639645098),
    (0.99, 3.0, 10.0, 0.089498488307039231218),
    (0.99, 3.0, 20.0, 0.047263342383993965184),
    (0.99, 3.0, 50.0, 0.019510718722683187418),
    (0.99, 3.0, 200.0, 0.0049534669868329437695),
    (1.25, 1.0, 0.5, 0.62687869726747622194),
    (1.25, 1.0, 2.0, 0.065699641821600651374),
    (1.25, 1.0, 5.0, -0.10080645224636170735),
    (1.25, 1.0, 10.0, -0.033192071062565766551),
    (1.25, 1.0, 30.0, -0.0073112585579934502641),
    (1.25, 2.0, 0.5, 0.82385394927319426103),
    (1.25, 2.0, 2.0, 0.47668290314940920669),
    (1.25, 2.0, 5.0, 0.19663992993524367428),
    (1.25, 2.0, 10.0, 0.085223864695594600138),
    (1.25, 2.0, 30.0, 0.027528485805973719849),
    (1.5, 1.0, 0.5, 0.66323679487242795678),
    (1.5, 1.0, 2.0, 0.029430685602826471728),
    (1.5, 1.0, 5.0, -0.3000820504131308808),
    (1.5, 1.0, 10.0, -0.10971305425274014669),
    (1.5, 1.0, 30.0, -0.014470224834105874553),
    (1.5, 2.0, 0.5, 0.85954405339801580655),
    (1.5, 2.0, 2.0, 0.5399986928166693417),
    (1.5, 2.0, 5.0, 0.20456444300647947614),
    (1.5, 2.0, 10.0, 0.045888794773684101781),
    (1.5, 2.0, 30.0, 0.019875580087330172014),
    (1.75, 1.0, 0.5, 0.70995321772058425723),
    (1.75, 1.0, 2.0, 0.060133592269468741106),
    (1.75, 1.0, 5.0, -0.52547978347312162151),
    (1.75, 1.0, 10.0, -0.45392110108013876532),
    (1.75, 1.0, 30.0, 0.20308994223622007542),
    (1.75, 2.0, 0.5, 0.89162381297088557056),
    (1.75, 2.0, 2.0, 0.61769369980750381047),
    (1.75, 2.0, 5.0, 0.25303722649793382597),
    (1.75, 2.0, 10.0, -0.010850348662019258824),
    (1.75, 2.0, 30.0, 0.019033966465866220265),
];

/// (beta, alpha, y, f_D(y; beta, alpha))
pub const DEBYE: &[(f64, f64, f64, f64)] = &[
    (0.25, 0.5, 0.1, 0.99415329812009663781),
    (0.25, 0.5, 0.5, 0.87307759180514454189),
    (0.25, 0.5, 1.0, 0.63866533915276470171),
    (0.25, 0.5, 2.0, 0.31874643333283505172),
    (0.25, 0.5, 5.0, 0.075316687849530890247),
    (0.25, 0.5, 10.0, 0.020721891569758031769),
    (0.25, 0.5, 20.0, 0.0053559124459099649267),
    (0.25, 0.5, 50.0, 8.6763023750816949332e-4),
    (0.25, 1.0, 0.1, 0.99634115600434737674),
    (0.25, 1.0, 0.5, 0.91834031717236596449),
    (0.25, 1.0, 1.0, 0.7524988591911799917),
    (0.25, 1.0, 2.0, 0.47557328921503465107),
    (0.25, 1.0, 5.0, 0.17109988230906952704),
    (0.25, 1.0, 10.0, 0.063958625339749398996),
    (0.25, 1.0, 20.0, 0.021526813817474166132),
    (0.25, 1.0, 50.0, 0.004633909269959834735),
    (0.25, 1.5, 0.1, 0.99748948007283897951),
    (0.25, 1.5, 0.5, 0.94317872825020848318),
    (0.25, 1.5, 1.0, 0.8220327523695973118),
    (0.25, 1.5, 2.0, 0.59664253200562293494),
    (0.25, 1.5, 5.0, 0.287999854125697306),
    (0.25, 1.5, 10.0, 0.14124504926342280644),
    (0.25, 1.5, 20.0, 0.063816947399811445074),
    (0.25, 1.5, 50.0, 0.020756124291634989348),
    (0.5, 0.5, 0.1, 0.99401513999486076775),
    (0.5, 0.5, 0.5, 0.86798805100534273819),
    (0.5, 0.5, 1.0, 0.61643104262998925514),
    (0.5, 0.5, 2.0, 0.27964604626626808467),
    (0.5, 0.5, 5.0, 0.057119650232293084674),
    (0.5, 0.5, 10.0, 0.01484729243243996767),
    (0.5, 0.5, 20.0, 0.0037487990741525399148),
    (0.5, 0.5, 50.0, 6.0148236683228498224e-4),
    (0.5, 1.0, 0.1, 0.99625532788297688413),
    (0.5, 1.0, 0.5, 0.91532721035287510476),
    (0.5, 1.0, 1.0, 0.73855570707945721724),
    (0.5, 1.0, 2.0, 0.44407687087613462042),
    (0.5, 1.0, 5.0, 0.1460429595044738404),
    (0.5, 1.0, 10.0, 0.051857626268016767979),
    (0.5, 1.0, 20.0, 0.016856386872589154627),
    (0.5, 1.0, 50.0, 0.0035233212850756736798),
    (0.5, 1.5, 0.1, 0.99743080571182508053),
    (0.5, 1.5, 0.5, 0.94117677651736741354),
    (0.5, 1.5, 1.0, 0.81257251048931933445),
    (0.5, 1.5, 2.0, 0.57249860290030604111),
    (0.5, 1.5, 5.0, 0.26192804190168075353),
    (0.5, 1.5, 10.0, 0.12454832957232270688),
    (0.5, 1.5, 20.0, 0.055124107218419255197),
    (0.5, 1.5, 50.0, 0.017639159741727307578),
    (0.75, 0.5, 0.1, 0.99422197102960356088),
    (0.75, 0.5, 0.5, 0.86929706894620788164),
    (0.75, 0.5, 1.0, 0.60245978341065160834),
    (0.75, 0.5, 2.0, 0.23241665125575335122),
    (0.75, 0.5, 5.0, 0.034164108953869593205),
    (0.75, 0.5, 10.0, 0.0078132347126155163791),
    (0.75, 0.5, 20.0, 0.0018772742758439274065),
    (0.75, 0.5, 50.0, 2.9552059047812559022e-4),
    (0.75, 1.0, 0.1, 0.99638561425623920338),
    (0.75, 1.0, 0.5, 0.91659169532155347251),
    (0.75, 1.0, 1.0, 0.73225792814381236318),
    (0.75, 1.0, 2.0, 0.41106671895948448929),
    (0.75, 1.0, 5.0, 0.11515254424440707367),
    (0.75, 1.0, 10.0, 0.037062777744934472895),
    (0.75, 1.0, 20.0, 0.011231559922439598605),
    (0.75, 1.0, 50.0, 0.0022045476951873025866),
    (0.75, 1.5, 0.1, 0.99752049435133028729),
    (0.75, 1.5, 0.5, 0.94220540186650923112),
    (0.75, 1.5, 1.0, 0.80932341045114997204),
    (0.75, 1.5, 2.0, 0.54977456475992028748),
    (0.75, 1.5, 5.0, 0.23136477803665324809),
    (0.75, 1.5, 10.0, 0.10462599662272426577),
    (0.75, 1.5, 20.0, 0.044751688419605637231),
    (0.75, 1.5, 50.0, 0.013932027250277959263),
    (1.0, 0.5, 0.1, 0.99468329530743400057),
    (1.0, 0.5, 0.5, 0.87651422152921125829),
    (1.0, 0.5, 1.0, 0.60124870560077000935),
    (1.0, 0.5, 2.0, 0.17399327517346123716),
    (1.0, 0.5, 5.0, 0.0063385600001999508385),
    (1.0, 0.5, 10.0, 3.9976e-4),
    (1.0, 0.5, 20.0, 2.49990625e-5),
    (1.0, 0.5, 50.0, 6.399993856e-7),
    (1.0, 1.0, 0.1, 0.99667498336107147775),
    (1.0, 1.0, 0.5, 0.92162505828495578385),
    (1.0, 1.0, 1.0, 0.73575888234288464319),
    (1.0, 1.0, 2.0, 0.37728945486109177254),
    (1.0, 1.0, 5.0, 0.07680000000004444142),
    (1.0, 1.0, 10.0, 0.0198),
    (1.0, 1.0, 20.0, 0.0049875),
    (1.0, 1.0, 50.0, 7.9968e-4),
    (1.0, 1.5, 0.1, 0.99771927640513672779),
    (1.0, 1.5, 0.5, 0.94584207252333681696),
    (1.0, 1.5, 1.0, 0.81340900089868344696),
    (1.0, 1.5, 2.0, 0.5298379738921477615),
    (1.0, 1.5, 5.0, 0.19488374279379746595),
    (1.0, 1.5, 10.0, 0.08123829471086764876),
    (1.0, 1.5, 20.0, 0.032853434391895513659),
    (1.0, 1.5, 50.0, 0.0097666200830217850707),
    (0.7, 1.3, 1.5, 0.62907772454588613374),
    (1.0, 0.8, 2.0, 0.30088293800160891343),
    (0.5, 0.5, 0.5, 0.86798805100534273819),
    (0.5, 0.5, 2.0, 0.27964604626626808467),
    (0.33333333333333333333, 1.0, 3.0, 0.30768845308163852339),
    (0.33333333333333333333, 1.0, 30.0, 0.010251486260554544065),
    (0.33333333333333333333, 1.0, 100.0, 0.001277631802017131823),
    (0.33333333333333333333, 1.0, 300.0, 1.7800930945803469042e-4),
];

/// E_{1/2}(-100) = exp(10^4) erfc(100) and its five-term algebraic partial sum.
pub const ML_HALF_AT_MINUS_100: f64 = 0.0056416137829894329036;
pub const ML_HALF_ASYMPTOTIC_5_TERMS: f64 = 0.0056416137830000077574;
