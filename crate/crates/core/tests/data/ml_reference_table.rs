// (alpha, beta, z, E_{alpha,beta}(z)); INFINITY marks values beyond f64 range
#[rustfmt::skip]
#[allow(clippy::excessive_precision)]
const TABLE: &[(f64, f64, f64, f64)] = &[
    (0.2, 0.2, -5.0, 0.0051015750325124382445),
    (0.2, 0.2, -3.0, 0.011815674786608619792),
    (0.2, 0.2, -1.5, 0.031633286600391869286),
    (0.2, 0.2, -0.5, 0.093107212317280332788),
    (0.2, 0.2, 0.5, 0.84909113262101603862),
    (0.2, 0.2, 1.5, 50264.397324218475114),
    (0.2, 0.2, 3.0, 1.3836113810820613393e+108),
    (0.2, 0.2, 5.0, f64::INFINITY),
    (0.2, 0.5, -5.0, 0.062194511919234891288),
    (0.2, 0.5, -3.0, 0.098243481637165354057),
    (0.2, 0.5, -1.5, 0.17151479570462846408),
    (0.2, 0.5, -0.5, 0.32757327650858873001),
    (0.2, 0.5, 0.5, 1.4516237010250374212),
    (0.2, 0.5, 1.5, 27360.211761896174275),
    (0.2, 0.5, 3.0, 2.6627613444051934665e+107),
    (0.2, 0.5, 5.0, f64::INFINITY),
    (0.2, 1.0, -5.0, 0.14819344124611919893),
    (0.2, 1.0, -3.0, 0.22585454512648809638),
    (0.2, 1.0, -1.5, 0.37097697838398594137),
    (0.2, 1.0, -0.5, 0.64296499192613900796),
    (0.2, 1.0, 0.5, 2.0897724527766631852),
    (0.2, 1.0, 1.5, 9927.7221658089076629),
    (0.2, 1.0, 3.0, 1.7081621988667424983e+106),
    (0.2, 1.0, 5.0, f64::INFINITY),
    (0.2, 1.5, -5.0, 0.18721727656102686045),
    (0.2, 1.5, -3.0, 0.28168621014749052127),
    (0.2, 1.5, -1.5, 0.45245990952964056789),
    (0.2, 1.5, -0.5, 0.75575764333878048942),
    (0.2, 1.5, 0.5, 2.1524980085632432059),
    (0.2, 1.5, 1.5, 3601.2771101655472909),
    (0.2, 1.5, 3.0, 1.0957865614836187105e+105),
    (0.2, 1.5, 5.0, f64::INFINITY),
    (0.2, 2.0, -5.0, 0.17751371965235810008),
    (0.2, 2.0, -3.0, 0.26502043666739519079),
    (0.2, 2.0, -1.5, 0.42001222917419035083),
    (0.2, 2.0, -0.5, 0.68625623709957169888),
    (0.2, 2.0, 0.5, 1.8062014036894620122),
    (0.2, 2.0, 1.5, 1305.4604005612620688),
    (0.2, 2.0, 3.0, 7.0294740694104629562e+103),
    (0.2, 2.0, 5.0, f64::INFINITY),
    (0.25, 0.2, -5.0, -0.0024054630249334123611),
    (0.25, 0.2, -3.0, 0.0012715983547186843644),
    (0.25, 0.2, -1.5, 0.017465826736012908599),
    (0.25, 0.2, -0.5, 0.079667777922233371065),
    (0.25, 0.2, 0.5, 0.92029651352679810714),
    (0.25, 0.2, 1.5, 2313.1612626240575283),
    (0.25, 0.2, 3.0, 2.0262873846784507926e+37),
    (0.25, 0.2, 5.0, 1.8741968116753483538e+274),
    (0.25, 0.5, -5.0, 0.053918548703283762212),
    (0.25, 0.5, -3.0, 0.087082614296628537004),
    (0.25, 0.5, -1.5, 0.15749145732525515065),
    (0.25, 0.5, -0.5, 0.31558274379872313555),
    (0.25, 0.5, 0.5, 1.492117608349150496),
    (0.25, 0.5, 1.5, 1421.7958645021706828),
    (0.25, 0.5, 3.0, 5.4219503325061099741e+36),
    (0.25, 0.5, 5.0, 2.7167594696637366934e+273),
    (0.25, 1.0, -5.0, 0.14279894642587369523),
    (0.25, 1.0, -3.0, 0.21900442756040679925),
    (0.25, 1.0, -1.5, 0.36327790329995259347),
    (0.25, 1.0, -0.5, 0.63767051920039335655),
    (0.25, 1.0, 0.5, 2.0796142210090508739),
    (0.25, 1.0, 1.5, 631.11448955998912533),
    (0.25, 1.0, 3.0, 6.0243892583401221934e+35),
    (0.25, 1.0, 5.0, 1.0867037878654946774e+272),
    (0.25, 1.5, -5.0, 0.1863644881212023993),
    (0.25, 1.5, -3.0, 0.28097693128032428573),
    (0.25, 1.5, -1.5, 0.45252083568053710206),
    (0.25, 1.5, -0.5, 0.75720737944324794108),
    (0.25, 1.5, 0.5, 2.1119315813945289806),
    (0.25, 1.5, 1.5, 279.3153758146701642),
    (0.25, 1.5, 3.0, 6.6937658426001357705e+34),
    (0.25, 1.5, 5.0, 4.3468151514619787095e+270),
    (0.25, 2.0, -5.0, 0.17993246326723105464),
    (0.25, 2.0, -3.0, 0.26853261339754040402),
    (0.25, 2.0, -1.5, 0.42499535412513355125),
    (0.25, 2.0, -0.5, 0.69144335365297608493),
    (0.25, 2.0, 0.5, 1.7580791529340310106),
    (0.25, 2.0, 1.5, 122.91328834194583363),
    (0.25, 2.0, 3.0, 7.437517602889039745e+33),
    (0.25, 2.0, 5.0, 1.7387260605847914838e+269),
    (0.3333333333333333, 0.2, -5.0, -0.014597910284188474804),
    (0.3333333333333333, 0.2, -3.0, -0.016281327480825971723),
    (0.3333333333333333, 0.2, -1.5, -0.0067208637575768028993),
    (0.3333333333333333, 0.2, -0.5, 0.056768774746304230921),
    (0.3333333333333333, 0.2, 0.5, 1.0088510618750802241),
    (0.3333333333333333, 0.2, 1.5, 232.18819569414909709),
    (0.3333333333333333, 0.2, 3.0, 22292731096758.673447),
    (0.3333333333333333, 0.2, 5.0, 2.7635002170790453959e+56),
    (0.3333333333333333, 0.5, -5.0, 0.039851290032746350119),
    (0.3333333333333333, 0.5, -3.0, 0.067962083839936491366),
    (0.3333333333333333, 0.5, -1.5, 0.133449273182221227),
    (0.3333333333333333, 0.5, -0.5, 0.29568912146256742542),
    (0.3333333333333333, 0.5, 0.5, 1.5318175300604138133),
    (0.3333333333333333, 0.5, 1.5, 161.07763886975989632),
    (0.3333333333333333, 0.5, 3.0, 8293811263199.4781188),
    (0.3333333333333333, 0.5, 5.0, 6.4921194084177991326e+55),
    (0.3333333333333333, 1.0, -5.0, 0.13308375880743357531),
    (0.3333333333333333, 1.0, -3.0, 0.20679633503129910738),
    (0.3333333333333333, 1.0, -1.5, 0.35000212128225267662),
    (0.3333333333333333, 1.0, -0.5, 0.62946115066558682266),
    (0.3333333333333333, 1.0, 0.5, 2.0471959156045907426),
    (0.3333333333333333, 1.0, 1.5, 87.074315908464062083),
    (0.3333333333333333, 1.0, 3.0, 1596144721805.1120785),
    (0.3333333333333333, 1.0, 5.0, 5.8067281261071677062e+54),
    (0.3333333333333333, 1.5, -5.0, 0.18434088069780330595),
    (0.3333333333333333, 1.5, -3.0, 0.2792487888018428642),
    (0.3333333333333333, 1.5, -1.5, 0.45249858666070804788),
    (0.3333333333333333, 1.5, -0.5, 0.7602012967969201992),
    (0.3333333333333333, 1.5, 0.5, 2.0415723200271332201),
    (0.3333333333333333, 1.5, 1.5, 46.447196073218745571),
    (0.3333333333333333, 1.5, 3.0, 307178194932.83537034),
    (0.3333333333333333, 1.5, 5.0, 5.1936955267342393061e+53),
    (0.3333333333333333, 2.0, -5.0, 0.18368790254714759788),
    (0.3333333333333333, 2.0, -3.0, 0.27419457802571837268),
    (0.3333333333333333, 2.0, -1.5, 0.43337051047630573395),
    (0.3333333333333333, 2.0, -0.5, 0.70038904265150761762),
    (0.3333333333333333, 2.0, 0.5, 1.6827169030830382619),
    (0.3333333333333333, 2.0, 1.5, 24.267303333083769037),
    (0.3333333333333333, 2.0, 3.0, 59116471177.436405534),
    (0.3333333333333333, 2.0, 5.0, 4.6453825008857341649e+52),
    (0.5, 0.2, -5.0, -0.037497969700735908173),
    (0.5, 0.2, -3.0, -0.051677836167358131885),
    (0.5, 0.2, -1.5, -0.058649070187537778472),
    (0.5, 0.2, -0.5, 0.0088148595776319078299),
    (0.5, 0.2, 0.5, 1.0988098276165108187),
    (0.5, 0.2, 1.5, 36.455410443668742438),
    (0.5, 0.2, 3.0, 93988.502531948391495),
    (0.5, 0.2, 5.0, 1891228701629.4343662),
    (0.5, 0.5, -5.0, 0.010666394882413155097),
    (0.5, 0.5, -3.0, 0.02718613000358643569),
    (0.5, 0.5, -1.5, 0.081811458866280033417),
    (0.5, 0.5, -0.5, 0.25634441145129334951),
    (0.5, 0.5, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 1.5, 28.545018967941857195),
    (0.5, 0.5, 3.0, 48618.530751582307633),
    (0.5, 0.5, 5.0, 720048993373.86939164),
    (0.5, 1.0, -5.0, 0.11070463773306862637),
    (0.5, 1.0, -3.0, 0.17900115118138995042),
    (0.5, 1.0, -1.5, 0.32158541645431750235),
    (0.5, 1.0, -0.5, 0.61569034419292587487),
    (0.5, 1.0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 1.5, 18.653886256262733939),
    (0.5, 1.0, 3.0, 16205.988853999586625),
    (0.5, 1.0, 5.0, 144009798674.66104041),
    (0.5, 1.5, -5.0, 0.17785907245338627473),
    (0.5, 1.5, -3.0, 0.27366628293953668319),
    (0.5, 1.5, -1.5, 0.45227638903045499843),
    (0.5, 1.5, -0.5, 0.76861931161414825026),
    (0.5, 1.5, 0.5, 1.9047209783651141866),
    (0.5, 1.5, 1.5, 11.769257504175155959),
    (0.5, 1.5, 3.0, 5401.6629513331955418),
    (0.5, 1.5, 5.0, 28801959734.732208082),
    (0.5, 2.0, -5.0, 0.19010401892842525983),
    (0.5, 2.0, -3.0, 0.28490429471865863023),
    (0.5, 2.0, -1.5, 0.45073518537670505031),
    (0.5, 2.0, -0.5, 0.71951971096272864728),
    (0.5, 2.0, 0.5, 1.5526836225392032253),
    (0.5, 2.0, 1.5, 7.0939188913864289235),
    (0.5, 2.0, 3.0, 1800.1781907220333431),
    (0.5, 2.0, 5.0, 5760391946.720765783),
    (0.75, 0.2, -5.0, -0.065891034447899834487),
    (0.75, 0.2, -3.0, -0.1082809764816094054),
    (0.75, 0.2, -1.5, -0.15424960110032163466),
    (0.75, 0.2, -0.5, -0.068015918616034701169),
    (0.75, 0.2, 0.5, 1.1075797012021193009),
    (0.75, 0.2, 1.5, 11.544434935221686695),
    (0.75, 0.2, 3.0, 325.86677708570151257),
    (0.75, 0.2, 5.0, 38341.830580771386387),
    (0.75, 0.5, -5.0, -0.036034073628165468138),
    (0.75, 0.5, -3.0, -0.044710851077772569578),
    (0.75, 0.5, -1.5, -0.01023041036484833796),
    (0.75, 0.5, -0.5, 0.20043772471309275697),
    (0.75, 0.5, 0.5, 1.4668836938168524399),
    (0.75, 0.5, 1.5, 9.8377307262016193641),
    (0.75, 0.5, 3.0, 210.00568985875064834),
    (0.75, 0.5, 5.0, 20141.192099265819769),
    (0.75, 1.0, -5.0, 0.067923974332643942122),
    (0.75, 1.0, -3.0, 0.12585513691184152704),
    (0.75, 1.0, -1.5, 0.27382227983917813457),
    (0.75, 1.0, -0.5, 0.60379034509524675559),
    (0.75, 1.0, 0.5, 1.7937773945015026827),
    (0.75, 1.0, 1.5, 7.3142232927861618284),
    (0.75, 1.0, 3.0, 100.86180177510028035),
    (0.75, 1.0, 5.0, 6888.1316797401478446),
    (0.75, 1.5, -5.0, 0.16078168362535895391),
    (0.75, 1.5, -3.0, 0.25937691717838529078),
    (0.75, 1.5, -1.5, 0.4533927112759852263),
    (0.75, 1.5, -0.5, 0.78841325325936186518),
    (0.75, 1.5, 0.5, 1.7293561897380092415),
    (0.75, 1.5, 1.5, 5.1441702976919260501),
    (0.75, 1.5, 3.0, 48.254522165987373118),
    (0.75, 1.5, 5.0, 2355.5614761036393704),
    (0.75, 2.0, -5.0, 0.19664358397713058128),
    (0.75, 2.0, -3.0, 0.30009861325966476842),
    (0.75, 2.0, -1.5, 0.48021065914162278278),
    (0.75, 2.0, -0.5, 0.75151786730302039495),
    (0.75, 2.0, 0.5, 1.404251138434710097),
    (0.75, 2.0, 1.5, 3.386065406965603196),
    (0.75, 2.0, 3.0, 22.903523591248931142),
    (0.75, 2.0, 5.0, 805.40446385702671307),
    (0.9, 0.2, -5.0, -0.076409225329372761263),
    (0.9, 0.2, -3.0, -0.14939587740233879569),
    (0.9, 0.2, -1.5, -0.23048754025252775292),
    (0.9, 0.2, -0.5, -0.11463016676978648087),
    (0.9, 0.2, 0.5, 1.0774214723255484175),
    (0.9, 0.2, 1.5, 7.7283574299223262659),
    (0.9, 0.2, 3.0, 87.529345265158618387),
    (0.9, 0.2, 5.0, 1835.4719050601366541),
    (0.9, 0.5, -5.0, -0.066346276353700427973),
    (0.9, 0.5, -3.0, -0.10025244677360000814),
    (0.9, 0.5, -1.5, -0.078047481282496216696),
    (0.9, 0.5, -0.5, 0.17138027546767609782),
    (0.9, 0.5, 0.5, 1.4042134129976267389),
    (0.9, 0.5, 1.5, 6.7940954899119515467),
    (0.9, 0.5, 3.0, 60.721506565421882473),
    (0.9, 0.5, 5.0, 1073.4144961144848701),
    (0.9, 1.0, -5.0, 0.034431324804098423905),
    (0.9, 1.0, -3.0, 0.08388835403377326904),
    (0.9, 1.0, -1.5, 0.24309267847921726014),
    (0.9, 1.0, -0.5, 0.60340549869586096762),
    (0.9, 1.0, 0.5, 1.7043087220993991263),
    (0.9, 1.0, 1.5, 5.2994392444280818094),
    (0.9, 1.0, 3.0, 32.921897176850828949),
    (0.9, 1.0, 5.0, 438.95181466448276021),
    (0.9, 1.5, -5.0, 0.14474048044025213334),
    (0.9, 1.5, -3.0, 0.24695903043826071234),
    (0.9, 1.5, -1.5, 0.45713743718163489183),
    (0.9, 1.5, -0.5, 0.80490771603316952206),
    (0.9, 1.5, 0.5, 1.6427066600516884125),
    (0.9, 1.5, 1.5, 3.8797014580263897494),
    (0.9, 1.5, 3.0, 17.691143584478281987),
    (0.9, 1.5, 5.0, 179.3949595116734037),
    (0.9, 2.0, -5.0, 0.19845803684071396061),
    (0.9, 2.0, -3.0, 0.30957669519125859609),
    (0.9, 2.0, -1.5, 0.50150803764598741899),
    (0.9, 2.0, -0.5, 0.77245380829774060651),
    (0.9, 2.0, 0.5, 1.336112340231968956),
    (0.9, 2.0, 1.5, 2.6372564606857743683),
    (0.9, 2.0, 3.0, 9.3509010402901798763),
    (0.9, 2.0, 5.0, 73.199935805814645368),
    (1.0, 0.2, -5.0, -0.078823140558057031492),
    (1.0, 0.2, -3.0, -0.18547776506713800281),
    (1.0, 0.2, -1.5, -0.29270304213384972485),
    (1.0, 0.2, -0.5, -0.14422118632094335486),
    (1.0, 0.2, 0.5, 1.0499734235779587027),
    (1.0, 0.2, 1.5, 6.2593557203001791144),
    (1.0, 0.2, 3.0, 48.409186498653295736),
    (1.0, 0.2, 5.0, 537.86067599528019122),
    (1.0, 0.5, -5.0, -0.088606475886827649911),
    (1.0, 0.5, -3.0, -0.14740544177658248956),
    (1.0, 0.5, -1.5, -0.12921287534824336464),
    (1.0, 0.5, -0.5, 0.15527712659616933968),
    (1.0, 0.5, 0.5, 1.360084006368273076),
    (1.0, 0.5, 1.5, 5.5960825418646560636),
    (1.0, 0.5, 3.0, 34.855670388507185914),
    (1.0, 0.5, 5.0, 331.90660470521432209),
    (1.0, 1.0, -5.0, 0.0067379469990854670966),
    (1.0, 1.0, -3.0, 0.049787068367863942979),
    (1.0, 1.0, -1.5, 0.22313016014842982893),
    (1.0, 1.0, -0.5, 0.6065306597126334236),
    (1.0, 1.0, 0.5, 1.6487212707001281468),
    (1.0, 1.0, 1.5, 4.4816890703380648226),
    (1.0, 1.0, 3.0, 20.085536923187667741),
    (1.0, 1.0, 5.0, 148.41315910257660342),
    (1.0, 1.5, -5.0, 0.13055921188691678737),
    (1.0, 1.5, -3.0, 0.23719834177477959217),
    (1.0, 1.5, -1.5, 0.46226830593066643439),
    (1.0, 1.5, -0.5, 0.81782491390317389453),
    (1.0, 1.5, 0.5, 1.5917888456410335782),
    (1.0, 1.5, 1.5, 3.3545953055445998511),
    (1.0, 1.5, 3.0, 11.430493601653143209),
    (1.0, 1.5, 5.0, 66.268483024333313161),
    (1.0, 2.0, -5.0, 0.19865241060018290658),
    (1.0, 2.0, -3.0, 0.31673764387737868567),
    (1.0, 2.0, -1.5, 0.51791322656771344738),
    (1.0, 2.0, -0.5, 0.78693868057473315279),
    (1.0, 2.0, 0.5, 1.2974425414002562937),
    (1.0, 2.0, 1.5, 2.3211260468920432151),
    (1.0, 2.0, 3.0, 6.3618456410625559136),
    (1.0, 2.0, 5.0, 29.482631820515320684),];
