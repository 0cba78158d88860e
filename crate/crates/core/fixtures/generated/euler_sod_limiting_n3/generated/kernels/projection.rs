//! Generated DG↔subcell projection for solver `euler_sod_limiting_n3` (order
//! 3, 2D: 7^2 subcells per cell). The
//! projection (P) and reconstruction (R) matrices are precomputed at
//! generation time. Do not edit; regenerate from the specification.
#![allow(dead_code)]

pub const N_SUB: usize = 7;
pub const N_SUB_TOT: usize = 49;
const N_PTS: usize = 16;

/// Row-major N_SUB_TOT x N_PTS: subcell means of the nodal basis.
static P: [f64; 784] = [1.0168788885682558, -0.027461118965733205, 0.02755640424765623, -0.0085700442631092, -0.027461118965733205, 0.0007415957429423353, -0.0007441689505209249, 0.00023143661226185857, 0.02755640424765623, -0.0007441689505209249, 0.0007467510866799514, -0.00023223965684551878, -0.0085700442631092, 0.00023143661226185857, -0.00023223965684551878, 7.222655470314745e-5, 0.2990449975514378, 0.8630512752579987, -0.2054254080044082, 0.05173326478204125, -0.008075799730123128, -0.023306958193179975, 0.005547574673062633, -0.001397072310809462, 0.008103821343335572, 0.023387829263473086, -0.005566823787323833, 0.0014019199074849086, -0.00252028918535777, -0.007273617058475714, 0.0017312827113991904, -0.0004359972205554177, -0.025490243600138577, 0.9589645338445972, 0.0931796825919938, -0.01824984324938288, 0.0006883716633693685, -0.025897124469663666, -0.0025163452379769274, 0.0004928424832212916, -0.0006907601926967355, 0.02598698296411055, 0.002525076516032839, -0.0004945525604769192, 0.00021482648365155874, -0.008081954099146822, -0.0007852990294254216, 0.00015380589193097184, -0.08762310162192748, 0.5918251664154623, 0.5918251664154623, -0.0876231016219275, 0.002366288104549205, -0.015982415885074173, -0.015982415885074173, 0.002366288104549206, -0.0023744987105858498, 0.016037872074070716, 0.016037872074070716, -0.0023744987105858506, 0.0007384693180405516, -0.004987779694535408, -0.004987779694535408, 0.0007384693180405519, -0.018249843249382853, 0.0931796825919937, 0.9589645338445973, -0.025490243600138584, 0.0004928424832212908, -0.0025163452379769248, -0.02589712446966367, 0.0006883716633693687, -0.0004945525604769184, 0.0025250765160328365, 0.025986982964110554, -0.0006907601926967357, 0.00015380589193097162, -0.0007852990294254207, -0.008081954099146822, 0.0002148264836515588, 0.05173326478204121, -0.20542540800440814, 0.8630512752579989, 0.29904499755143793, -0.001397072310809461, 0.005547574673062631, -0.023306958193179978, -0.008075799730123132, 0.0014019199074849075, -0.005566823787323831, 0.02338782926347309, 0.008103821343335576, -0.00043599722055541733, 0.00173128271139919, -0.007273617058475716, -0.002520289185357771, -0.008570044263109297, 0.027556404247656572, -0.02746111896573399, 1.0168788885682563, 0.00023143661226186118, -0.0007441689505209342, 0.0007415957429423566, -0.02746111896573322, -0.00023223965684552138, 0.0007467510866799607, -0.0007441689505209462, 0.027556404247656242, 7.222655470314826e-5, -0.00023223965684552168, 0.00023143661226186516, -0.008570044263109205, 0.2990449975514378, -0.008075799730123128, 0.008103821343335572, -0.00252028918535777, 0.8630512752579987, -0.023306958193179975, 0.023387829263473086, -0.007273617058475714, -0.2054254080044082, 0.005547574673062633, -0.005566823787323833, 0.0017312827113991904, 0.05173326478204125, -0.001397072310809462, 0.0014019199074849086, -0.0004359972205554177, 0.08794352165817117, 0.2538071833310262, -0.06041175731376972, 0.015213782303864772, 0.2538071833310262, 0.7324938221238928, -0.17434982901279772, 0.04390735282769466, -0.06041175731376972, -0.17434982901279772, 0.041499138912396656, -0.010450926993099402, 0.015213782303864772, 0.04390735282769466, -0.010450926993099402, 0.0026319070197012417, -0.00749620227215223, 0.2820134726951057, 0.027402395964577213, -0.005366936408238258, -0.02163422556319496, 0.8138978723681297, 0.07908399396744664, -0.015489111502565383, 0.005149427085719995, -0.1937258043621589, -0.018823750329926087, 0.003686753199094791, -0.0012968048961871893, 0.04878689753882064, 0.00474047523852651, -0.0009284527229986841, -0.025768309780599647, 0.17404467477024588, 0.17404467477024588, -0.025768309780599654, -0.07436798073696037, 0.5022972453718684, 0.5022972453718684, -0.0743679807369604, 0.017701234241021376, -0.11955792144465648, -0.11955792144465648, 0.017701234241021383, -0.0044577866333849175, 0.030108844212465555, 0.030108844212465555, -0.004457786633384919, -0.00536693640823825, 0.027402395964577185, 0.28201347269510574, -0.007496202272152232, -0.015489111502565359, 0.07908399396744656, 0.8138978723681298, -0.021634225563194966, 0.0036867531990947854, -0.018823750329926066, -0.1937258043621589, 0.005149427085719997, -0.0009284527229986827, 0.004740475238526505, 0.048786897538820644, -0.0012968048961871897, 0.01521378230386476, -0.0604117573137697, 0.25380718333102625, 0.0879435216581712, 0.043907352827694625, -0.17434982901279766, 0.7324938221238929, 0.2538071833310263, -0.010450926993099394, 0.04149913891239665, -0.17434982901279772, -0.06041175731376974, 0.00263190701970124, -0.0104509269930994, 0.043907352827694666, 0.015213782303864777, -0.0025202891853577983, 0.008103821343335673, -0.00807579973012336, 0.29904499755143793, -0.007273617058475797, 0.023387829263473377, -0.02330695819318064, 0.8630512752579991, 0.0017312827113992097, -0.005566823787323902, 0.005547574673062791, -0.20542540800440828, -0.0004359972205554226, 0.0014019199074849261, -0.001397072310809502, 0.05173326478204127, -0.025490243600138577, 0.0006883716633693685, -0.0006907601926967355, 0.00021482648365155874, 0.9589645338445972, -0.025897124469663666, 0.02598698296411055, -0.008081954099146822, 0.0931796825919938, -0.0025163452379769274, 0.002525076516032839, -0.0007852990294254216, -0.01824984324938288, 0.0004928424832212916, -0.0004945525604769192, 0.00015380589193097184, -0.00749620227215223, -0.02163422556319496, 0.005149427085719995, -0.0012968048961871893, 0.2820134726951057, 0.8138978723681297, -0.1937258043621589, 0.04878689753882064, 0.027402395964577213, 0.07908399396744664, -0.018823750329926087, 0.00474047523852651, -0.005366936408238258, -0.015489111502565383, 0.003686753199094791, -0.0009284527229986841, 0.0006389674582675658, -0.024038496468354355, -0.0023357479780091684, 0.0004574713422815731, -0.024038496468354355, 0.9043485782919355, 0.08787281542094974, -0.017210459004633676, -0.0023357479780091684, 0.08787281542094974, 0.008538335632249603, -0.0016722882345658946, 0.0004574713422815731, -0.017210459004633676, -0.0016722882345658946, 0.00032752846221046326, 0.002196460395089329, -0.01483536321799652, -0.01483536321799652, 0.0021964603950893296, -0.0826326986876464, 0.558118917807595, 0.558118917807595, -0.08263269868764643, -0.008029169342233996, 0.05423072676254614, 0.05423072676254614, -0.008029169342233997, 0.0015725647248675146, -0.010621438442221283, -0.010621438442221283, 0.001572564724867515, 0.0004574713422815724, -0.002335747978009166, -0.024038496468354355, 0.000638967458267566, -0.01721045900463365, 0.08787281542094964, 0.9043485782919356, -0.02403849646835436, -0.001672288234565892, 0.008538335632249594, 0.08787281542094975, -0.002335747978009169, 0.0003275284622104628, -0.0016722882345658928, -0.01721045900463368, 0.0004574713422815732, -0.0012968048961871882, 0.005149427085719994, -0.021634225563194963, -0.007496202272152233, 0.048786897538820595, -0.19372580436215883, 0.8138978723681298, 0.2820134726951058, 0.004740475238526506, -0.01882375032992608, 0.07908399396744666, 0.027402395964577223, -0.0009284527229986833, 0.0036867531990947898, -0.015489111502565385, -0.00536693640823826, 0.00021482648365156115, -0.0006907601926967442, 0.0006883716633693881, -0.025490243600138587, -0.008081954099146912, 0.025986982964110873, -0.025897124469664405, 0.9589645338445977, -0.0007852990294254303, 0.0025250765160328707, -0.002516345237976999, 0.09317968259199384, 0.00015380589193097357, -0.0004945525604769254, 0.0004928424832213057, -0.018249843249382888, -0.08762310162192748, 0.002366288104549205, -0.0023744987105858498, 0.0007384693180405516, 0.5918251664154623, -0.015982415885074173, 0.016037872074070716, -0.004987779694535408, 0.5918251664154623, -0.015982415885074173, 0.016037872074070716, -0.004987779694535408, -0.0876231016219275, 0.002366288104549206, -0.0023744987105858506, 0.0007384693180405519, -0.025768309780599647, -0.07436798073696037, 0.017701234241021376, -0.0044577866333849175, 0.17404467477024588, 0.5022972453718684, -0.11955792144465648, 0.030108844212465555, 0.17404467477024588, 0.5022972453718684, -0.11955792144465648, 0.030108844212465555, -0.025768309780599654, -0.0743679807369604, 0.017701234241021383, -0.004457786633384919, 0.002196460395089329, -0.0826326986876464, -0.008029169342233996, 0.0015725647248675146, -0.01483536321799652, 0.558118917807595, 0.05423072676254614, -0.010621438442221283, -0.01483536321799652, 0.558118917807595, 0.05423072676254614, -0.010621438442221283, 0.0021964603950893296, -0.08263269868764643, -0.008029169342233997, 0.001572564724867515, 0.007550366148968656, -0.050996787603930435, -0.050996787603930435, 0.007550366148968659, -0.050996787603930435, 0.34444320905889214, 0.34444320905889214, -0.050996787603930456, -0.050996787603930435, 0.34444320905889214, 0.34444320905889214, -0.050996787603930456, 0.007550366148968659, -0.050996787603930456, -0.050996787603930456, 0.007550366148968661, 0.0015725647248675122, -0.008029169342233987, -0.08263269868764642, 0.0021964603950893296, -0.010621438442221265, 0.05423072676254608, 0.5581189178075951, -0.014835363217996526, -0.010621438442221265, 0.05423072676254608, 0.5581189178075951, -0.014835363217996526, 0.0015725647248675126, -0.00802916934223399, -0.08263269868764644, 0.0021964603950893305, -0.004457786633384914, 0.017701234241021373, -0.07436798073696038, -0.025768309780599657, 0.03010884421246553, -0.11955792144465643, 0.5022972453718685, 0.17404467477024593, 0.03010884421246553, -0.11955792144465643, 0.5022972453718685, 0.17404467477024593, -0.004457786633384916, 0.01770123424102138, -0.07436798073696041, -0.025768309780599664, 0.00073846931804056, -0.0023744987105858797, 0.0023662881045492727, -0.08762310162192752, -0.004987779694535464, 0.016037872074070918, -0.015982415885074628, 0.5918251664154626, -0.004987779694535464, 0.016037872074070918, -0.015982415885074628, 0.5918251664154626, 0.0007384693180405602, -0.00237449871058588, 0.0023662881045492736, -0.08762310162192755, -0.018249843249382853, 0.0004928424832212908, -0.0004945525604769184, 0.00015380589193097162, 0.0931796825919937, -0.0025163452379769248, 0.0025250765160328365, -0.0007852990294254207, 0.9589645338445973, -0.02589712446966367, 0.025986982964110554, -0.008081954099146822, -0.025490243600138584, 0.0006883716633693687, -0.0006907601926967357, 0.0002148264836515588, -0.00536693640823825, -0.015489111502565359, 0.0036867531990947854, -0.0009284527229986827, 0.027402395964577185, 0.07908399396744656, -0.018823750329926066, 0.004740475238526505, 0.28201347269510574, 0.8138978723681298, -0.1937258043621589, 0.048786897538820644, -0.007496202272152232, -0.021634225563194966, 0.005149427085719997, -0.0012968048961871897, 0.0004574713422815724, -0.01721045900463365, -0.001672288234565892, 0.0003275284622104628, -0.002335747978009166, 0.08787281542094964, 0.008538335632249594, -0.0016722882345658928, -0.024038496468354355, 0.9043485782919356, 0.08787281542094975, -0.01721045900463368, 0.000638967458267566, -0.02403849646835436, -0.002335747978009169, 0.0004574713422815732, 0.0015725647248675122, -0.010621438442221265, -0.010621438442221265, 0.0015725647248675126, -0.008029169342233987, 0.05423072676254608, 0.05423072676254608, -0.00802916934223399, -0.08263269868764642, 0.5581189178075951, 0.5581189178075951, -0.08263269868764644, 0.0021964603950893296, -0.014835363217996526, -0.014835363217996526, 0.0021964603950893305, 0.0003275284622104623, -0.0016722882345658902, -0.017210459004633652, 0.0004574713422815725, -0.0016722882345658902, 0.008538335632249585, 0.08787281542094966, -0.0023357479780091663, -0.017210459004633652, 0.08787281542094966, 0.9043485782919357, -0.02403849646835436, 0.0004574713422815725, -0.0023357479780091663, -0.02403849646835436, 0.0006389674582675661, -0.0009284527229986819, 0.003686753199094784, -0.01548911150256536, -0.0053669364082382515, 0.004740475238526501, -0.01882375032992606, 0.07908399396744657, 0.027402395964577195, 0.0487868975388206, -0.19372580436215886, 0.8138978723681299, 0.28201347269510585, -0.0012968048961871886, 0.005149427085719995, -0.021634225563194966, -0.007496202272152234, 0.00015380589193097333, -0.0004945525604769246, 0.0004928424832213049, -0.01824984324938286, -0.0007852990294254295, 0.0025250765160328677, -0.0025163452379769963, 0.09317968259199375, -0.008081954099146913, 0.025986982964110877, -0.02589712446966441, 0.9589645338445978, 0.0002148264836515612, -0.0006907601926967443, 0.0006883716633693883, -0.025490243600138594, 0.05173326478204121, -0.001397072310809461, 0.0014019199074849075, -0.00043599722055541733, -0.20542540800440814, 0.005547574673062631, -0.005566823787323831, 0.00173128271139919, 0.8630512752579989, -0.023306958193179978, 0.02338782926347309, -0.007273617058475716, 0.29904499755143793, -0.008075799730123132, 0.008103821343335576, -0.002520289185357771, 0.01521378230386476, 0.043907352827694625, -0.010450926993099394, 0.00263190701970124, -0.0604117573137697, -0.17434982901279766, 0.04149913891239665, -0.0104509269930994, 0.25380718333102625, 0.7324938221238929, -0.17434982901279772, 0.043907352827694666, 0.0879435216581712, 0.2538071833310263, -0.06041175731376974, 0.015213782303864777, -0.0012968048961871882, 0.048786897538820595, 0.004740475238526506, -0.0009284527229986833, 0.005149427085719994, -0.19372580436215883, -0.01882375032992608, 0.0036867531990947898, -0.021634225563194963, 0.8138978723681298, 0.07908399396744666, -0.015489111502565385, -0.007496202272152233, 0.2820134726951058, 0.027402395964577223, -0.00536693640823826, -0.004457786633384914, 0.03010884421246553, 0.03010884421246553, -0.004457786633384916, 0.017701234241021373, -0.11955792144465643, -0.11955792144465643, 0.01770123424102138, -0.07436798073696038, 0.5022972453718685, 0.5022972453718685, -0.07436798073696041, -0.025768309780599657, 0.17404467477024593, 0.17404467477024593, -0.025768309780599664, -0.0009284527229986819, 0.004740475238526501, 0.0487868975388206, -0.0012968048961871886, 0.003686753199094784, -0.01882375032992606, -0.19372580436215886, 0.005149427085719995, -0.01548911150256536, 0.07908399396744657, 0.8138978723681299, -0.021634225563194966, -0.0053669364082382515, 0.027402395964577195, 0.28201347269510585, -0.007496202272152234, 0.0026319070197012378, -0.010450926993099392, 0.04390735282769463, 0.015213782303864765, -0.010450926993099392, 0.041499138912396635, -0.1743498290127977, -0.06041175731376973, 0.04390735282769463, -0.1743498290127977, 0.732493822123893, 0.2538071833310263, 0.015213782303864765, -0.06041175731376973, 0.2538071833310263, 0.08794352165817124, -0.0004359972205554222, 0.0014019199074849248, -0.0013970723108095008, 0.05173326478204123, 0.0017312827113992093, -0.005566823787323901, 0.00554757467306279, -0.20542540800440823, -0.007273617058475798, 0.02338782926347338, -0.023306958193180644, 0.8630512752579992, -0.002520289185357799, 0.008103821343335676, -0.008075799730123363, 0.29904499755143804, -0.008570044263109297, 0.00023143661226186118, -0.00023223965684552138, 7.222655470314826e-5, 0.027556404247656572, -0.0007441689505209342, 0.0007467510866799607, -0.00023223965684552168, -0.02746111896573399, 0.0007415957429423566, -0.0007441689505209462, 0.00023143661226186516, 1.0168788885682563, -0.02746111896573322, 0.027556404247656242, -0.008570044263109205, -0.0025202891853577983, -0.007273617058475797, 0.0017312827113992097, -0.0004359972205554226, 0.008103821343335673, 0.023387829263473377, -0.005566823787323902, 0.0014019199074849261, -0.00807579973012336, -0.02330695819318064, 0.005547574673062791, -0.001397072310809502, 0.29904499755143793, 0.8630512752579991, -0.20542540800440828, 0.05173326478204127, 0.00021482648365156115, -0.008081954099146912, -0.0007852990294254303, 0.00015380589193097357, -0.0006907601926967442, 0.025986982964110873, 0.0025250765160328707, -0.0004945525604769254, 0.0006883716633693881, -0.025897124469664405, -0.002516345237976999, 0.0004928424832213057, -0.025490243600138587, 0.9589645338445977, 0.09317968259199384, -0.018249843249382888, 0.00073846931804056, -0.004987779694535464, -0.004987779694535464, 0.0007384693180405602, -0.0023744987105858797, 0.016037872074070918, 0.016037872074070918, -0.00237449871058588, 0.0023662881045492727, -0.015982415885074628, -0.015982415885074628, 0.0023662881045492736, -0.08762310162192752, 0.5918251664154626, 0.5918251664154626, -0.08762310162192755, 0.00015380589193097333, -0.0007852990294254295, -0.008081954099146913, 0.0002148264836515612, -0.0004945525604769246, 0.0025250765160328677, 0.025986982964110877, -0.0006907601926967443, 0.0004928424832213049, -0.0025163452379769963, -0.02589712446966441, 0.0006883716633693883, -0.01824984324938286, 0.09317968259199375, 0.9589645338445978, -0.025490243600138594, -0.0004359972205554222, 0.0017312827113992093, -0.007273617058475798, -0.002520289185357799, 0.0014019199074849248, -0.005566823787323901, 0.02338782926347338, 0.008103821343335676, -0.0013970723108095008, 0.00554757467306279, -0.023306958193180644, -0.008075799730123363, 0.05173326478204123, -0.20542540800440823, 0.8630512752579992, 0.29904499755143804, 7.222655470314908e-5, -0.00023223965684552428, 0.00023143661226186776, -0.0085700442631093, -0.00023223965684552428, 0.00074675108667997, -0.0007441689505209555, 0.027556404247656586, 0.00023143661226186776, -0.0007441689505209555, 0.0007415957429423777, -0.027461118965734003, -0.0085700442631093, 0.027556404247656586, -0.027461118965734003, 1.0168788885682567];

/// Row-major N_PTS x N_SUB_TOT: mean-preserving least-squares
/// reconstruction; R·P = I.
static R: [f64; 784] = [0.8408810635362571, 0.18760904754209368, -0.0748711931388079, -0.0873645605709438, 0.009324043181189965, 0.07438971605309727, -0.032972444019717904, 0.18760904754209368, 0.041857470986006964, -0.01670451844169307, -0.01949191474085514, 0.002080288088672099, 0.016597096047039964, -0.0073564848656002026, -0.0748711931388079, -0.01670451844169307, 0.006666454752179073, 0.007778851459071032, -0.0008302033047547132, -0.006623584523035666, 0.002935832820490654, -0.0873645605709438, -0.01949191474085514, 0.007778851459071032, 0.009076868031319399, -0.0009687350216253771, -0.007728827697278619, 0.0034257200068443347, 0.009324043181189965, 0.002080288088672099, -0.0008302033047547132, -0.0009687350216253771, 0.00010338891552520553, 0.0008248644841621314, -0.0003656123382495014, 0.07438971605309727, 0.016597096047039964, -0.006623584523035666, -0.007728827697278619, 0.0008248644841621314, 0.006580989981137599, -0.0029169532465011913, -0.032972444019717904, -0.0073564848656002026, 0.002935832820490654, 0.0034257200068443347, -0.0003656123382495014, -0.0029169532465011913, 0.0012929082503789237, -0.07451555131688775, 0.3857706131121646, 0.43415712062401873, 0.24747491610133823, 0.002554944426786302, -0.12377184951697358, 0.045325479152721976, -0.0166251711637368, 0.08606931519106814, 0.09686483310891919, 0.05521415014993937, 0.0005700338742515764, -0.027614748158021195, 0.010112571613244017, 0.006634788766712304, -0.034348622336828054, -0.03865690766554887, -0.022034914381960813, -0.0002274896485745275, 0.011020519372099314, -0.004035734482449947, 0.007741901534949731, -0.04008019868350221, -0.04510738522586336, -0.025711766187956696, -0.00026544966560510815, 0.012859456245368443, -0.004709156550858978, -0.0008262597985343742, 0.0042775869390675805, 0.00481411690149793, 0.0027441060383574067, 2.833029924673639e-5, -0.0013724343662333495, 0.0005025879915178787, -0.006592122173249852, 0.034127735318903146, 0.03840831519005717, 0.021893213603387127, 0.00022602672206790785, -0.01094964929072558, 0.004009781728181568, 0.0029218874712934463, -0.015126752755973612, -0.01702407388666343, -0.009703932186461853, -0.0001001839210546917, 0.004853314643872215, -0.0017772927573669597, 0.04532547915272182, -0.12377184951697348, 0.002554944426786336, 0.2474749161013381, 0.43415712062401857, 0.3857706131121645, -0.07451555131688763, 0.010112571613243982, -0.02761474815802117, 0.0005700338742515838, 0.055214150149939335, 0.09686483310891916, 0.08606931519106811, -0.016625171163736772, -0.004035734482449934, 0.011020519372099306, -0.0002274896485745305, -0.0220349143819608, -0.038656907665548856, -0.03434862233682805, 0.006634788766712293, -0.0047091565508589625, 0.012859456245368432, -0.0002654496656051117, -0.02571176618795668, -0.04510738522586335, -0.0400801986835022, 0.007741901534949718, 0.000502587991517877, -0.0013724343662333484, 2.8330299246736767e-5, 0.002744106038357405, 0.004814116901497929, 0.00427758693906758, -0.0008262597985343728, 0.004009781728181554, -0.010949649290725571, 0.00022602672206791086, 0.021893213603387113, 0.038408315190057156, 0.03412773531890314, -0.00659212217324984, -0.0017772927573669539, 0.004853314643872212, -0.00010018392105469303, -0.009703932186461846, -0.017024073886663427, -0.015126752755973607, 0.002921887471293441, -0.03297244401971784, 0.07438971605309705, 0.009324043181189838, -0.08736456057094363, -0.07487119313880758, 0.1876090475420939, 0.8408810635362568, -0.0073564848656001896, 0.016597096047039916, 0.0020802880886720706, -0.019491914740855102, -0.016704518441692996, 0.04185747098600701, 0.1876090475420936, 0.0029358328204906487, -0.006623584523035647, -0.0008302033047547019, 0.007778851459071017, 0.006666454752179045, -0.01670451844169309, -0.07487119313880787, 0.003425720006844329, -0.007728827697278597, -0.0009687350216253639, 0.009076868031319381, 0.007778851459070999, -0.019491914740855164, -0.08736456057094377, -0.00036561233824950075, 0.000824864484162129, 0.00010338891552520412, -0.0009687350216253753, -0.0008302033047547097, 0.002080288088672102, 0.009324043181189961, -0.002916953246501186, 0.00658098998113758, 0.0008248644841621201, -0.007728827697278604, -0.006623584523035638, 0.01659709604703998, 0.07438971605309724, 0.0012929082503789215, -0.0029169532465011827, -0.0003656123382494964, 0.003425720006844328, 0.0029358328204906413, -0.007356484865600211, -0.03297244401971789, -0.07451555131688775, -0.0166251711637368, 0.006634788766712304, 0.007741901534949731, -0.0008262597985343742, -0.006592122173249852, 0.0029218874712934463, 0.3857706131121646, 0.08606931519106814, -0.034348622336828054, -0.04008019868350221, 0.0042775869390675805, 0.034127735318903146, -0.015126752755973612, 0.43415712062401873, 0.09686483310891919, -0.03865690766554887, -0.04510738522586336, 0.00481411690149793, 0.03840831519005717, -0.01702407388666343, 0.24747491610133823, 0.05521415014993937, -0.022034914381960813, -0.025711766187956696, 0.0027441060383574067, 0.021893213603387127, -0.009703932186461853, 0.002554944426786302, 0.0005700338742515764, -0.0002274896485745275, -0.00026544966560510815, 2.833029924673639e-5, 0.00022602672206790785, -0.0001001839210546917, -0.12377184951697358, -0.027614748158021195, 0.011020519372099314, 0.012859456245368443, -0.0013724343662333495, -0.01094964929072558, 0.004853314643872215, 0.045325479152721976, 0.010112571613244017, -0.004035734482449947, -0.004709156550858978, 0.0005025879915178787, 0.004009781728181568, -0.0017772927573669597, 0.006603273196222139, -0.034185464704149904, -0.038473285467269136, -0.02193024746310824, -0.00022640906163988328, 0.010968171367163247, -0.0040165645466715295, -0.034185464704149904, 0.1769798041533832, 0.1991780596245025, 0.11353395177292909, 0.0011721306623839335, -0.05678275364341189, 0.020793948919262662, -0.038473285467269136, 0.1991780596245025, 0.22416060197128143, 0.1277743091863489, 0.0013191488829859901, -0.0639049113255261, 0.023402096174093792, -0.02193024746310824, 0.11353395177292909, 0.1277743091863489, 0.07283293292610066, 0.0007519311411336818, -0.03642658801960258, 0.013339483592841279, -0.00022640906163988328, 0.0011721306623839335, 0.0013191488829859901, 0.0007519311411336818, 7.762977794403526e-6, -0.00037607006606444915, 0.00013771755052451897, 0.010968171367163247, -0.05678275364341189, -0.0639049113255261, -0.03642658801960258, -0.00037607006606444915, 0.01821835619466511, -0.006671595577837073, -0.0040165645466715295, 0.020793948919262662, 0.023402096174093792, 0.013339483592841279, 0.00013771755052451897, -0.006671595577837073, 0.002443150582775911, -0.0040165645466715165, 0.010968171367163238, -0.0002264090616398863, -0.021930247463108225, -0.03847328546726912, -0.0341854647041499, 0.006603273196222128, 0.02079394891926259, -0.05678275364341184, 0.001172130662383949, 0.11353395177292902, 0.1991780596245024, 0.17697980415338316, -0.03418546470414985, 0.023402096174093712, -0.06390491132552605, 0.0013191488829860075, 0.12777430918634883, 0.22416060197128135, 0.19917805962450244, -0.03847328546726907, 0.013339483592841234, -0.03642658801960255, 0.0007519311411336917, 0.07283293292610062, 0.12777430918634886, 0.11353395177292906, -0.0219302474631082, 0.0001377175505245185, -0.0003760700660644489, 7.76297779440363e-6, 0.0007519311411336813, 0.0013191488829859895, 0.0011721306623839333, -0.0002264090616398829, -0.0066715955778370506, 0.01821835619466509, -0.00037607006606445414, -0.03642658801960256, -0.06390491132552609, -0.05678275364341188, 0.010968171367163227, 0.002443150582775903, -0.006671595577837067, 0.00013771755052452078, 0.01333948359284127, 0.023402096174093782, 0.020793948919262655, -0.0040165645466715225, 0.002921887471293441, -0.006592122173249833, -0.000826259798534363, 0.007741901534949716, 0.006634788766712276, -0.01662517116373682, -0.07451555131688772, -0.015126752755973584, 0.03412773531890305, 0.004277586939067522, -0.040080198683502134, -0.03434862233682791, 0.08606931519106824, 0.38577061311216443, -0.017024073886663403, 0.03840831519005706, 0.0048141169014978644, -0.04510738522586328, -0.038656907665548704, 0.09686483310891932, 0.43415712062401857, -0.009703932186461836, 0.021893213603387064, 0.0027441060383573694, -0.025711766187956647, -0.02203491438196072, 0.05521415014993943, 0.24747491610133815, -0.00010018392105469153, 0.0002260267220679072, 2.8330299246736004e-5, -0.00026544966560510766, -0.0002274896485745265, 0.000570033874251577, 0.002554944426786301, 0.004853314643872207, -0.010949649290725547, -0.0013724343662333308, 0.012859456245368418, 0.011020519372099268, -0.02761474815802123, -0.12377184951697354, -0.0017772927573669567, 0.0040097817281815554, 0.0005025879915178719, -0.0047091565508589695, -0.00403573448244993, 0.01011257161324403, 0.04532547915272196, 0.04532547915272182, 0.010112571613243982, -0.004035734482449934, -0.0047091565508589625, 0.000502587991517877, 0.004009781728181554, -0.0017772927573669539, -0.12377184951697348, -0.02761474815802117, 0.011020519372099306, 0.012859456245368432, -0.0013724343662333484, -0.010949649290725571, 0.004853314643872212, 0.002554944426786336, 0.0005700338742515838, -0.0002274896485745305, -0.0002654496656051117, 2.8330299246736767e-5, 0.00022602672206791086, -0.00010018392105469303, 0.2474749161013381, 0.055214150149939335, -0.0220349143819608, -0.02571176618795668, 0.002744106038357405, 0.021893213603387113, -0.009703932186461846, 0.43415712062401857, 0.09686483310891916, -0.038656907665548856, -0.04510738522586335, 0.004814116901497929, 0.038408315190057156, -0.017024073886663427, 0.3857706131121645, 0.08606931519106811, -0.03434862233682805, -0.0400801986835022, 0.00427758693906758, 0.03412773531890314, -0.015126752755973607, -0.07451555131688763, -0.016625171163736772, 0.006634788766712293, 0.007741901534949718, -0.0008262597985343728, -0.00659212217324984, 0.002921887471293441, -0.0040165645466715165, 0.02079394891926259, 0.023402096174093712, 0.013339483592841234, 0.0001377175505245185, -0.0066715955778370506, 0.002443150582775903, 0.010968171367163238, -0.05678275364341184, -0.06390491132552605, -0.03642658801960255, -0.0003760700660644489, 0.01821835619466509, -0.006671595577837067, -0.0002264090616398863, 0.001172130662383949, 0.0013191488829860075, 0.0007519311411336917, 7.76297779440363e-6, -0.00037607006606445414, 0.00013771755052452078, -0.021930247463108225, 0.11353395177292902, 0.12777430918634883, 0.07283293292610062, 0.0007519311411336813, -0.03642658801960256, 0.01333948359284127, -0.03847328546726912, 0.1991780596245024, 0.22416060197128135, 0.12777430918634886, 0.0013191488829859895, -0.06390491132552609, 0.023402096174093782, -0.0341854647041499, 0.17697980415338316, 0.19917805962450244, 0.11353395177292906, 0.0011721306623839333, -0.05678275364341188, 0.020793948919262655, 0.006603273196222128, -0.03418546470414985, -0.03847328546726907, -0.0219302474631082, -0.0002264090616398829, 0.010968171367163227, -0.0040165645466715225, 0.0024431505827758947, -0.0066715955778370445, 0.00013771755052452032, 0.013339483592841225, 0.023402096174093705, 0.020793948919262586, -0.0040165645466715095, -0.0066715955778370445, 0.018218356194665077, -0.0003760700660644538, -0.036426588019602524, -0.06390491132552603, -0.05678275364341183, 0.010968171367163219, 0.00013771755052452032, -0.0003760700660644538, 7.762977794403733e-6, 0.0007519311411336913, 0.001319148882986007, 0.0011721306623839489, -0.00022640906163988588, 0.013339483592841225, -0.036426588019602524, 0.0007519311411336913, 0.07283293292610057, 0.12777430918634877, 0.11353395177292899, -0.021930247463108187, 0.023402096174093705, -0.06390491132552603, 0.001319148882986007, 0.12777430918634877, 0.22416060197128126, 0.19917805962450238, -0.03847328546726905, 0.020793948919262586, -0.05678275364341183, 0.0011721306623839489, 0.11353395177292899, 0.19917805962450238, 0.1769798041533831, -0.034185464704149834, -0.0040165645466715095, 0.010968171367163219, -0.00022640906163988588, -0.021930247463108187, -0.03847328546726905, -0.034185464704149834, 0.0066032731962221165, -0.0017772927573669506, 0.004009781728181542, 0.0005025879915178702, -0.004709156550858953, -0.004035734482449917, 0.010112571613243995, 0.04532547915272181, 0.004853314643872203, -0.010949649290725538, -0.0013724343662333295, 0.012859456245368408, 0.011020519372099259, -0.027614748158021205, -0.12377184951697344, -0.00010018392105469286, 0.0002260267220679102, 2.833029924673638e-5, -0.0002654496656051112, -0.00022748964857452952, 0.0005700338742515846, 0.002554944426786335, -0.009703932186461829, 0.02189321360338705, 0.0027441060383573677, -0.02571176618795663, -0.022034914381960705, 0.055214150149939405, 0.247474916101338, -0.017024073886663396, 0.038408315190057045, 0.004814116901497864, -0.045107385225863265, -0.03865690766554869, 0.09686483310891927, 0.4341571206240184, -0.01512675275597358, 0.034127735318903035, 0.0042775869390675215, -0.04008019868350212, -0.0343486223368279, 0.08606931519106822, 0.3857706131121643, 0.002921887471293436, -0.006592122173249821, -0.0008262597985343616, 0.007741901534949703, 0.006634788766712265, -0.016625171163736793, -0.0745155513168876, -0.03297244401971784, -0.0073564848656001896, 0.0029358328204906487, 0.003425720006844329, -0.00036561233824950075, -0.002916953246501186, 0.0012929082503789215, 0.07438971605309705, 0.016597096047039916, -0.006623584523035647, -0.007728827697278597, 0.000824864484162129, 0.00658098998113758, -0.0029169532465011827, 0.009324043181189838, 0.0020802880886720706, -0.0008302033047547019, -0.0009687350216253639, 0.00010338891552520412, 0.0008248644841621201, -0.0003656123382494964, -0.08736456057094363, -0.019491914740855102, 0.007778851459071017, 0.009076868031319381, -0.0009687350216253753, -0.007728827697278604, 0.003425720006844328, -0.07487119313880758, -0.016704518441692996, 0.006666454752179045, 0.007778851459070999, -0.0008302033047547097, -0.006623584523035638, 0.0029358328204906413, 0.1876090475420939, 0.04185747098600701, -0.01670451844169309, -0.019491914740855164, 0.002080288088672102, 0.01659709604703998, -0.007356484865600211, 0.8408810635362568, 0.1876090475420936, -0.07487119313880787, -0.08736456057094377, 0.009324043181189961, 0.07438971605309724, -0.03297244401971789, 0.002921887471293441, -0.015126752755973584, -0.017024073886663403, -0.009703932186461836, -0.00010018392105469153, 0.004853314643872207, -0.0017772927573669567, -0.006592122173249833, 0.03412773531890305, 0.03840831519005706, 0.021893213603387064, 0.0002260267220679072, -0.010949649290725547, 0.0040097817281815554, -0.000826259798534363, 0.004277586939067522, 0.0048141169014978644, 0.0027441060383573694, 2.8330299246736004e-5, -0.0013724343662333308, 0.0005025879915178719, 0.007741901534949716, -0.040080198683502134, -0.04510738522586328, -0.025711766187956647, -0.00026544966560510766, 0.012859456245368418, -0.0047091565508589695, 0.006634788766712276, -0.03434862233682791, -0.038656907665548704, -0.02203491438196072, -0.0002274896485745265, 0.011020519372099268, -0.00403573448244993, -0.01662517116373682, 0.08606931519106824, 0.09686483310891932, 0.05521415014993943, 0.000570033874251577, -0.02761474815802123, 0.01011257161324403, -0.07451555131688772, 0.38577061311216443, 0.43415712062401857, 0.24747491610133815, 0.002554944426786301, -0.12377184951697354, 0.04532547915272196, -0.0017772927573669506, 0.004853314643872203, -0.00010018392105469286, -0.009703932186461829, -0.017024073886663396, -0.01512675275597358, 0.002921887471293436, 0.004009781728181542, -0.010949649290725538, 0.0002260267220679102, 0.02189321360338705, 0.038408315190057045, 0.034127735318903035, -0.006592122173249821, 0.0005025879915178702, -0.0013724343662333295, 2.833029924673638e-5, 0.0027441060383573677, 0.004814116901497864, 0.0042775869390675215, -0.0008262597985343616, -0.004709156550858953, 0.012859456245368408, -0.0002654496656051112, -0.02571176618795663, -0.045107385225863265, -0.04008019868350212, 0.007741901534949703, -0.004035734482449917, 0.011020519372099259, -0.00022748964857452952, -0.022034914381960705, -0.03865690766554869, -0.0343486223368279, 0.006634788766712265, 0.010112571613243995, -0.027614748158021205, 0.0005700338742515846, 0.055214150149939405, 0.09686483310891927, 0.08606931519106822, -0.016625171163736793, 0.04532547915272181, -0.12377184951697344, 0.002554944426786335, 0.247474916101338, 0.4341571206240184, 0.3857706131121643, -0.0745155513168876, 0.0012929082503789192, -0.0029169532465011774, -0.00036561233824949576, 0.0034257200068443226, 0.002935832820490636, -0.007356484865600198, -0.032972444019717835, -0.0029169532465011774, 0.006580989981137561, 0.0008248644841621178, -0.007728827697278583, -0.006623584523035619, 0.016597096047039937, 0.07438971605309702, -0.00036561233824949576, 0.0008248644841621178, 0.00010338891552520271, -0.0009687350216253621, -0.0008302033047546983, 0.002080288088672073, 0.009324043181189835, 0.0034257200068443226, -0.007728827697278583, -0.0009687350216253621, 0.009076868031319366, 0.007778851459070984, -0.019491914740855126, -0.0873645605709436, 0.002935832820490636, -0.006623584523035619, -0.0008302033047546983, 0.007778851459070984, 0.006666454752179017, -0.016704518441693017, -0.07487119313880755, -0.007356484865600198, 0.016597096047039937, 0.002080288088672073, -0.019491914740855126, -0.016704518441693017, 0.04185747098600707, 0.18760904754209382, -0.032972444019717835, 0.07438971605309702, 0.009324043181189835, -0.0873645605709436, -0.07487119313880755, 0.18760904754209382, 0.8408810635362566];

/// Project padded AoS DOFs to subcell means (un-padded, stride 4).
pub fn apply_p(dofs: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; N_SUB_TOT * 4];
    for s in 0..N_SUB_TOT {
        for j in 0..N_PTS {
            let w = P[s * N_PTS + j];
            for v in 0..4 {
                out[s * 4 + v] += w * dofs[j * 4 + v];
            }
        }
    }
    out
}

/// Reconstruct padded AoS DOFs from subcell means.
pub fn apply_r(means: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; N_PTS * 4];
    for j in 0..N_PTS {
        for s in 0..N_SUB_TOT {
            let w = R[j * N_SUB_TOT + s];
            for v in 0..4 {
                out[j * 4 + v] += w * means[s * 4 + v];
            }
        }
    }
    out
}
