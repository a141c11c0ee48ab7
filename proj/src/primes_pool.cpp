// Generated by scripts/make_prime_table.py -- do not edit by hand.
// The 8192 largest primes below 2^31, descending.

#include "detlab/primes.hpp"

namespace detlab {

const std::array<std::uint32_t, kPrimePoolSize> kPrimePool = {
    2147483647U, 2147483629U, 2147483587U, 2147483579U, 2147483563U, 2147483549U, 2147483543U, 2147483497U,
    2147483489U, 2147483477U, 2147483423U, 2147483399U, 2147483353U, 2147483323U, 2147483269U, 2147483249U,
    2147483237U, 2147483179U, 2147483171U, 2147483137U, 2147483123U, 2147483077U, 2147483069U, 2147483059U,
    2147483053U, 2147483033U, 2147483029U, 2147482951U, 2147482949U, 2147482943U, 2147482937U, 2147482921U,
    2147482877U, 2147482873U, 2147482867U, 2147482859U, 2147482819U, 2147482817U, 2147482811U, 2147482801U,
    2147482763U, 2147482739U, 2147482697U, 2147482693U, 2147482681U, 2147482663U, 2147482661U, 2147482621U,
    2147482591U, 2147482583U, 2147482577U, 2147482507U, 2147482501U, 2147482481U, 2147482417U, 2147482409U,
    2147482367U, 2147482361U, 2147482349U, 2147482343U, 2147482327U, 2147482291U, 2147482273U, 2147482237U,
    2147482231U, 2147482223U, 2147482121U, 2147482093U, 2147482091U, 2147482081U, 2147482063U, 2147482021U,
    2147481997U, 2147481967U, 2147481949U, 2147481937U, 2147481907U, 2147481901U, 2147481899U, 2147481893U,
    2147481883U, 2147481863U, 2147481827U, 2147481811U, 2147481797U, 2147481793U, 2147481673U, 2147481629U,
    2147481571U, 2147481563U, 2147481529U, 2147481509U, 2147481499U, 2147481491U, 2147481487U, 2147481373U,
    2147481367U, 2147481359U, 2147481353U, 2147481337U, 2147481317U, 2147481311U, 2147481283U, 2147481269U,
    2147481263U, 2147481247U, 2147481209U, 2147481199U, 2147481179U, 2147481173U, 2147481151U, 2147481143U,
    2147481139U, 2147481071U, 2147481053U, 2147481031U, 2147481019U, 2147480989U, 2147480971U, 2147480969U,
    2147480957U, 2147480941U, 2147480927U, 2147480921U, 2147480899U, 2147480897U, 2147480893U, 2147480849U,
    2147480843U, 2147480837U, 2147480791U, 2147480747U, 2147480743U, 2147480723U, 2147480707U, 2147480683U,
    2147480677U, 2147480651U, 2147480641U, 2147480623U, 2147480611U, 2147480591U, 2147480551U, 2147480527U,
    2147480519U, 2147480507U, 2147480471U, 2147480459U, 2147480437U, 2147480429U, 2147480369U, 2147480327U,
    2147480311U, 2147480299U, 2147480297U, 2147480227U, 2147480219U, 2147480207U, 2147480197U, 2147480161U,
    2147480039U, 2147480011U, 2147480009U, 2147479991U, 2147479937U, 2147479907U, 2147479897U, 2147479891U,
    2147479879U, 2147479823U, 2147479819U, 2147479787U, 2147479781U, 2147479757U, 2147479753U, 2147479751U,
    2147479681U, 2147479657U, 2147479643U, 2147479637U, 2147479619U, 2147479601U, 2147479589U, 2147479573U,
    2147479549U, 2147479547U, 2147479531U, 2147479517U, 2147479513U, 2147479507U, 2147479489U, 2147479447U,
    2147479421U, 2147479403U, 2147479381U, 2147479361U, 2147479349U, 2147479339U, 2147479307U, 2147479273U,
    2147479259U, 2147479231U, 2147479189U, 2147479171U, 2147479133U, 2147479129U, 2147479121U, 2147479097U,
    2147479091U, 2147479079U, 2147479063U, 2147479057U, 2147479031U, 2147479013U, 2147478997U, 2147478967U,
    2147478961U, 2147478959U, 2147478937U, 2147478919U, 2147478911U, 2147478899U, 2147478889U, 2147478863U,
    2147478859U, 2147478821U, 2147478791U, 2147478763U, 2147478733U, 2147478731U, 2147478727U, 2147478721U,
    2147478719U, 2147478703U, 2147478701U, 2147478673U, 2147478661U, 2147478659U, 2147478653U, 2147478649U,
    2147478647U, 2147478611U, 2147478601U, 2147478581U, 2147478569U, 2147478563U, 2147478521U, 2147478517U,
    2147478503U, 2147478497U, 2147478491U, 2147478481U, 2147478461U, 2147478373U, 2147478349U, 2147478331U,
    2147478299U, 2147478293U, 2147478259U, 2147478253U, 2147478149U, 2147478133U, 2147478127U, 2147478089U,
    2147478083U, 2147478079U, 2147478049U, 2147478017U, 2147478013U, 2147477989U, 2147477953U, 2147477933U,
    2147477881U, 2147477879U, 2147477873U, 2147477861U, 2147477851U, 2147477833U, 2147477809U, 2147477807U,
    2147477737U, 2147477701U, 2147477699U, 2147477687U, 2147477681U, 2147477627U, 2147477599U, 2147477533U,
    2147477531U, 2147477513U, 2147477503U, 2147477473U, 2147477467U, 2147477443U, 2147477419U, 2147477399U,
    2147477393U, 2147477323U, 2147477273U, 2147477249U, 2147477237U, 2147477209U, 2147477207U, 2147477203U,
    2147477201U, 2147477191U, 2147477159U, 2147477113U, 2147477107U, 2147477093U, 2147477063U, 2147477029U,
    2147477021U, 2147476979U, 2147476963U, 2147476951U, 2147476943U, 2147476937U, 2147476931U, 2147476927U,
    2147476897U, 2147476871U, 2147476841U, 2147476823U, 2147476819U, 2147476789U, 2147476777U, 2147476769U,
    2147476763U, 2147476741U, 2147476739U, 2147476699U, 2147476693U, 2147476687U, 2147476663U, 2147476649U,
    2147476619U, 2147476607U, 2147476543U, 2147476519U, 2147476517U, 2147476417U, 2147476399U, 2147476381U,
    2147476367U, 2147476327U, 2147476321U, 2147476291U, 2147476249U, 2147476211U, 2147476183U, 2147476169U,
    2147476141U, 2147476139U, 2147476127U, 2147476109U, 2147476087U, 2147476073U, 2147476031U, 2147475997U,
    2147475977U, 2147475973U, 2147475971U, 2147475929U, 2147475899U, 2147475871U, 2147475859U, 2147475851U,
    2147475829U, 2147475797U, 2147475791U, 2147475787U, 2147475739U, 2147475721U, 2147475713U, 2147475691U,
    2147475653U, 2147475641U, 2147475601U, 2147475593U, 2147475587U, 2147475563U, 2147475559U, 2147475553U,
    2147475541U, 2147475521U, 2147475509U, 2147475503U, 2147475497U, 2147475487U, 2147475481U, 2147475439U,
    2147475413U, 2147475401U, 2147475397U, 2147475373U, 2147475367U, 2147475349U, 2147475347U, 2147475331U,
    2147475277U, 2147475269U, 2147475257U, 2147475251U, 2147475233U, 2147475229U, 2147475221U, 2147475203U,
    2147475193U, 2147475181U, 2147475179U, 2147475149U, 2147475107U, 2147475103U, 2147475061U, 2147475047U,
    2147474963U, 2147474951U, 2147474947U, 2147474929U, 2147474921U, 2147474891U, 2147474887U, 2147474881U,
    2147474851U, 2147474843U, 2147474837U, 2147474831U, 2147474809U, 2147474807U, 2147474803U, 2147474789U,
    2147474717U, 2147474711U, 2147474657U, 2147474627U, 2147474597U, 2147474551U, 2147474531U, 2147474519U,
    2147474513U, 2147474491U, 2147474479U, 2147474477U, 2147474393U, 2147474383U, 2147474359U, 2147474279U,
    2147474239U, 2147474213U, 2147474201U, 2147474159U, 2147474149U, 2147474123U, 2147474113U, 2147474093U,
    2147474071U, 2147474029U, 2147474027U, 2147474009U, 2147473963U, 2147473921U, 2147473897U, 2147473891U,
    2147473849U, 2147473837U, 2147473787U, 2147473781U, 2147473763U, 2147473733U, 2147473703U, 2147473697U,
    2147473579U, 2147473567U, 2147473553U, 2147473487U, 2147473483U, 2147473477U, 2147473469U, 2147473429U,
    2147473409U, 2147473373U, 2147473369U, 2147473351U, 2147473331U, 2147473301U, 2147473297U, 2147473291U,
    2147473283U, 2147473267U, 2147473241U, 2147473231U, 2147473217U, 2147473187U, 2147473151U, 2147473127U,
    2147473121U, 2147473117U, 2147473061U, 2147473049U, 2147472959U, 2147472923U, 2147472917U, 2147472893U,
    2147472883U, 2147472863U, 2147472797U, 2147472787U, 2147472757U, 2147472751U, 2147472713U, 2147472697U,
    2147472689U, 2147472683U, 2147472659U, 2147472617U, 2147472611U, 2147472601U, 2147472557U, 2147472499U,
    2147472491U, 2147472469U, 2147472449U, 2147472443U, 2147472421U, 2147472413U, 2147472377U, 2147472373U,
    2147472343U, 2147472311U, 2147472289U, 2147472263U, 2147472259U, 2147472251U, 2147472221U, 2147472199U,
    2147472161U, 2147472143U, 2147472137U, 2147472133U, 2147472109U, 2147472101U, 2147472091U, 2147472071U,
    2147472053U, 2147472043U, 2147472037U, 2147472023U, 2147471993U, 2147471951U, 2147471939U, 2147471933U,
    2147471891U, 2147471881U, 2147471863U, 2147471839U, 2147471831U, 2147471759U, 2147471741U, 2147471707U,
    2147471687U, 2147471681U, 2147471647U, 2147471639U, 2147471629U, 2147471621U, 2147471611U, 2147471597U,
    2147471581U, 2147471539U, 2147471519U, 2147471419U, 2147471387U, 2147471351U, 2147471327U, 2147471303U,
    2147471273U, 2147471251U, 2147471243U, 2147471237U, 2147471233U, 2147471197U, 2147471177U, 2147471173U,
    2147471159U, 2147471147U, 2147471111U, 2147471089U, 2147471057U, 2147471017U, 2147470987U, 2147470939U,
    2147470903U, 2147470891U, 2147470859U, 2147470837U, 2147470823U, 2147470789U, 2147470771U, 2147470769U,
    2147470751U, 2147470733U, 2147470727U, 2147470723U, 2147470679U, 2147470673U, 2147470643U, 2147470627U,
    2147470603U, 2147470597U, 2147470579U, 2147470553U, 2147470531U, 2147470529U, 2147470513U, 2147470511U,
    2147470453U, 2147470427U, 2147470361U, 2147470333U, 2147470327U, 2147470313U, 2147470249U, 2147470229U,
    2147470211U, 2147470183U, 2147470177U, 2147470147U, 2147470139U, 2147470123U, 2147470111U, 2147470081U,
    2147470067U, 2147470057U, 2147470043U, 2147470027U, 2147470019U, 2147470007U, 2147469983U, 2147469949U,
    2147469943U, 2147469917U, 2147469881U, 2147469829U, 2147469823U, 2147469817U, 2147469781U, 2147469703U,
    2147469679U, 2147469659U, 2147469637U, 2147469629U, 2147469619U, 2147469593U, 2147469553U, 2147469521U,
    2147469491U, 2147469463U, 2147469449U, 2147469421U, 2147469419U, 2147469347U, 2147469329U, 2147469283U,
    2147469271U, 2147469263U, 2147469239U, 2147469229U, 2147469187U, 2147469179U, 2147469173U, 2147469157U,
    2147469133U, 2147469131U, 2147469113U, 2147469101U, 2147469089U, 2147469073U, 2147469067U, 2147469047U,
    2147469041U, 2147469017U, 2147469007U, 2147469001U, 2147468993U, 2147468987U, 2147468971U, 2147468933U,
    2147468923U, 2147468909U, 2147468887U, 2147468881U, 2147468861U, 2147468833U, 2147468809U, 2147468803U,
    2147468801U, 2147468783U, 2147468779U, 2147468773U, 2147468753U, 2147468717U, 2147468651U, 2147468639U,
    2147468621U, 2147468599U, 2147468591U, 2147468563U, 2147468537U, 2147468507U, 2147468503U, 2147468497U,
    2147468443U, 2147468431U, 2147468429U, 2147468423U, 2147468417U, 2147468341U, 2147468317U, 2147468291U,
    2147468269U, 2147468249U, 2147468233U, 2147468231U, 2147468189U, 2147468173U, 2147468131U, 2147468119U,
    2147468069U, 2147468003U, 2147467967U, 2147467963U, 2147467921U, 2147467919U, 2147467871U, 2147467813U,
    2147467801U, 2147467793U, 2147467769U, 2147467759U, 2147467747U, 2147467733U, 2147467717U, 2147467711U,
    2147467697U, 2147467669U, 2147467667U, 2147467639U, 2147467631U, 2147467627U, 2147467583U, 2147467579U,
    2147467559U, 2147467493U, 2147467471U, 2147467463U, 2147467403U, 2147467393U, 2147467379U, 2147467367U,
    2147467339U, 2147467331U, 2147467327U, 2147467321U, 2147467261U, 2147467219U, 2147467211U, 2147467169U,
    2147467163U, 2147467121U, 2147467093U, 2147467067U, 2147467057U, 2147467043U, 2147467009U, 2147466991U,
    2147466973U, 2147466947U, 2147466943U, 2147466931U, 2147466869U, 2147466847U, 2147466833U, 2147466793U,
    2147466787U, 2147466721U, 2147466701U, 2147466683U, 2147466679U, 2147466641U, 2147466589U, 2147466547U,
    2147466539U, 2147466521U, 2147466487U, 2147466479U, 2147466463U, 2147466457U, 2147466449U, 2147466439U,
    2147466427U, 2147466383U, 2147466359U, 2147466337U, 2147466329U, 2147466319U, 2147466313U, 2147466301U,
    2147466283U, 2147466263U, 2147466257U, 2147466239U, 2147466229U, 2147466227U, 2147466187U, 2147466179U,
    2147466149U, 2147466121U, 2147466119U, 2147466091U, 2147466073U, 2147466019U, 2147466017U, 2147465989U,
    2147465981U, 2147465963U, 2147465953U, 2147465941U, 2147465917U, 2147465867U, 2147465851U, 2147465833U,
    2147465797U, 2147465743U, 2147465731U, 2147465729U, 2147465717U, 2147465707U, 2147465701U, 2147465699U,
    2147465669U, 2147465647U, 2147465609U, 2147465599U, 2147465597U, 2147465563U, 2147465549U, 2147465531U,
    2147465477U, 2147465473U, 2147465471U, 2147465431U, 2147465423U, 2147465413U, 2147465407U, 2147465363U,
    2147465351U, 2147465339U, 2147465321U, 2147465267U, 2147465239U, 2147465233U, 2147465227U, 2147465213U,
    2147465197U, 2147465189U, 2147465161U, 2147465153U, 2147465087U, 2147465009U, 2147464961U, 2147464903U,
    2147464841U, 2147464807U, 2147464783U, 2147464777U, 2147464751U, 2147464747U, 2147464729U, 2147464687U,
    2147464681U, 2147464661U, 2147464619U, 2147464609U, 2147464603U, 2147464597U, 2147464589U, 2147464567U,
    2147464559U, 2147464549U, 2147464513U, 2147464511U, 2147464489U, 2147464447U, 2147464411U, 2147464409U,
    2147464393U, 2147464351U, 2147464337U, 2147464331U, 2147464307U, 2147464301U, 2147464243U, 2147464219U,
    2147464211U, 2147464171U, 2147464133U, 2147464129U, 2147464103U, 2147464087U, 2147464061U, 2147464049U,
    2147464043U, 2147464013U, 2147464009U, 2147464003U, 2147463973U, 2147463943U, 2147463917U, 2147463889U,
    2147463863U, 2147463767U, 2147463761U, 2147463737U, 2147463727U, 2147463691U, 2147463673U, 2147463641U,
    2147463631U, 2147463599U, 2147463569U, 2147463553U, 2147463547U, 2147463499U, 2147463491U, 2147463449U,
    2147463421U, 2147463407U, 2147463401U, 2147463361U, 2147463347U, 2147463319U, 2147463299U, 2147463293U,
    2147463271U, 2147463259U, 2147463257U, 2147463251U, 2147463221U, 2147463203U, 2147463181U, 2147463167U,
    2147463161U, 2147463151U, 2147463133U, 2147463121U, 2147463077U, 2147463053U, 2147463047U, 2147463023U,
    2147463007U, 2147462981U, 2147462951U, 2147462923U, 2147462881U, 2147462861U, 2147462833U, 2147462809U,
    2147462753U, 2147462747U, 2147462717U, 2147462701U, 2147462693U, 2147462633U, 2147462623U, 2147462621U,
    2147462587U, 2147462579U, 2147462567U, 2147462543U, 2147462539U, 2147462497U, 2147462419U, 2147462393U,
    2147462381U, 2147462357U, 2147462323U, 2147462299U, 2147462297U, 2147462281U, 2147462257U, 2147462231U,
    2147462227U, 2147462197U, 2147462189U, 2147462179U, 2147462173U, 2147462159U, 2147462147U, 2147462143U,
    2147462123U, 2147462111U, 2147462089U, 2147462081U, 2147462077U, 2147462063U, 2147462047U, 2147462029U,
    2147462027U, 2147462017U, 2147461991U, 2147461973U, 2147461937U, 2147461933U, 2147461891U, 2147461889U,
    2147461847U, 2147461843U, 2147461837U, 2147461817U, 2147461807U, 2147461793U, 2147461787U, 2147461783U,
    2147461781U, 2147461727U, 2147461691U, 2147461651U, 2147461621U, 2147461619U, 2147461559U, 2147461499U,
    2147461487U, 2147461483U, 2147461423U, 2147461363U, 2147461361U, 2147461313U, 2147461297U, 2147461289U,
    2147461279U, 2147461273U, 2147461207U, 2147461201U, 2147461189U, 2147461177U, 2147461157U, 2147461133U,
    2147461103U, 2147461061U, 2147461051U, 2147461039U, 2147461037U, 2147461021U, 2147461007U, 2147460983U,
    2147460967U, 2147460947U, 2147460919U, 2147460911U, 2147460899U, 2147460877U, 2147460869U, 2147460857U,
    2147460851U, 2147460829U, 2147460811U, 2147460781U, 2147460779U, 2147460773U, 2147460709U, 2147460703U,
    2147460683U, 2147460671U, 2147460659U, 2147460641U, 2147460631U, 2147460629U, 2147460611U, 2147460589U,
    2147460569U, 2147460547U, 2147460467U, 2147460461U, 2147460457U, 2147460449U, 2147460437U, 2147460431U,
    2147460421U, 2147460379U, 2147460373U, 2147460299U, 2147460277U, 2147460269U, 2147460253U, 2147460233U,
    2147460223U, 2147460197U, 2147460187U, 2147460173U, 2147460151U, 2147460137U, 2147460089U, 2147460041U,
    2147460019U, 2147460017U, 2147460013U, 2147459999U, 2147459987U, 2147459981U, 2147459969U, 2147459959U,
    2147459917U, 2147459887U, 2147459851U, 2147459849U, 2147459843U, 2147459833U, 2147459779U, 2147459753U,
    2147459731U, 2147459723U, 2147459711U, 2147459707U, 2147459701U, 2147459617U, 2147459579U, 2147459557U,
    2147459543U, 2147459537U, 2147459473U, 2147459441U, 2147459437U, 2147459399U, 2147459393U, 2147459389U,
    2147459387U, 2147459359U, 2147459357U, 2147459341U, 2147459339U, 2147459333U, 2147459299U, 2147459269U,
    2147459267U, 2147459263U, 2147459213U, 2147459203U, 2147459183U, 2147459161U, 2147459137U, 2147459131U,
    2147459117U, 2147459089U, 2147459053U, 2147459047U, 2147458997U, 2147458991U, 2147458981U, 2147458967U,
    2147458897U, 2147458889U, 2147458879U, 2147458867U, 2147458849U, 2147458801U, 2147458777U, 2147458769U,
    2147458759U, 2147458757U, 2147458723U, 2147458711U, 2147458699U, 2147458693U, 2147458631U, 2147458627U,
    2147458601U, 2147458583U, 2147458543U, 2147458541U, 2147458507U, 2147458487U, 2147458463U, 2147458393U,
    2147458387U, 2147458373U, 2147458349U, 2147458331U, 2147458297U, 2147458283U, 2147458277U, 2147458231U,
    2147458171U, 2147458163U, 2147458129U, 2147458099U, 2147458073U, 2147458067U, 2147458063U, 2147458051U,
    2147458031U, 2147457973U, 2147457967U, 2147457959U, 2147457913U, 2147457889U, 2147457887U, 2147457853U,
    2147457841U, 2147457839U, 2147457817U, 2147457811U, 2147457791U, 2147457769U, 2147457757U, 2147457749U,
    2147457737U, 2147457709U, 2147457707U, 2147457701U, 2147457679U, 2147457677U, 2147457673U, 2147457659U,
    2147457623U, 2147457563U, 2147457547U, 2147457517U, 2147457469U, 2147457439U, 2147457437U, 2147457427U,
    2147457421U, 2147457413U, 2147457407U, 2147457383U, 2147457371U, 2147457343U, 2147457313U, 2147457293U,
    2147457283U, 2147457259U, 2147457241U, 2147457239U, 2147457229U, 2147457227U, 2147457217U, 2147457211U,
    2147457199U, 2147457173U, 2147457149U, 2147457113U, 2147457073U, 2147457071U, 2147457061U, 2147457049U,
    2147456981U, 2147456963U, 2147456957U, 2147456929U, 2147456923U, 2147456911U, 2147456903U, 2147456887U,
    2147456879U, 2147456869U, 2147456867U, 2147456797U, 2147456789U, 2147456737U, 2147456693U, 2147456683U,
    2147456681U, 2147456671U, 2147456659U, 2147456621U, 2147456611U, 2147456603U, 2147456599U, 2147456543U,
    2147456533U, 2147456501U, 2147456489U, 2147456417U, 2147456401U, 2147456393U, 2147456317U, 2147456299U,
    2147456189U, 2147456161U, 2147456141U, 2147456117U, 2147456107U, 2147456089U, 2147456063U, 2147456023U,
    2147456011U, 2147455993U, 2147455969U, 2147455907U, 2147455903U, 2147455889U, 2147455853U, 2147455837U,
    2147455831U, 2147455741U, 2147455721U, 2147455703U, 2147455699U, 2147455663U, 2147455631U, 2147455613U,
    2147455603U, 2147455571U, 2147455567U, 2147455547U, 2147455523U, 2147455517U, 2147455501U, 2147455489U,
    2147455477U, 2147455459U, 2147455403U, 2147455363U, 2147455361U, 2147455357U, 2147455313U, 2147455301U,
    2147455291U, 2147455267U, 2147455253U, 2147455241U, 2147455231U, 2147455229U, 2147455169U, 2147455151U,
    2147455111U, 2147455103U, 2147455091U, 2147455087U, 2147455081U, 2147455061U, 2147455043U, 2147455027U,
    2147455021U, 2147455019U, 2147455003U, 2147454997U, 2147454973U, 2147454941U, 2147454937U, 2147454851U,
    2147454839U, 2147454833U, 2147454809U, 2147454763U, 2147454761U, 2147454713U, 2147454643U, 2147454629U,
    2147454563U, 2147454539U, 2147454523U, 2147454521U, 2147454511U, 2147454509U, 2147454493U, 2147454481U,
    2147454403U, 2147454391U, 2147454383U, 2147454377U, 2147454367U, 2147454343U, 2147454341U, 2147454307U,
    2147454247U, 2147454241U, 2147454217U, 2147454163U, 2147454149U, 2147454131U, 2147454073U, 2147454019U,
    2147453999U, 2147453993U, 2147453963U, 2147453939U, 2147453933U, 2147453911U, 2147453897U, 2147453881U,
    2147453873U, 2147453849U, 2147453831U, 2147453809U, 2147453801U, 2147453797U, 2147453779U, 2147453729U,
    2147453713U, 2147453687U, 2147453657U, 2147453653U, 2147453647U, 2147453639U, 2147453599U, 2147453563U,
    2147453557U, 2147453551U, 2147453531U, 2147453527U, 2147453507U, 2147453467U, 2147453431U, 2147453419U,
    2147453401U, 2147453387U, 2147453339U, 2147453327U, 2147453317U, 2147453309U, 2147453281U, 2147453257U,
    2147453251U, 2147453237U, 2147453233U, 2147453197U, 2147453159U, 2147453137U, 2147453081U, 2147453057U,
    2147453047U, 2147452999U, 2147452991U, 2147452973U, 2147452949U, 2147452921U, 2147452897U, 2147452883U,
    2147452877U, 2147452847U, 2147452831U, 2147452807U, 2147452793U, 2147452757U, 2147452721U, 2147452651U,
    2147452627U, 2147452621U, 2147452591U, 2147452547U, 2147452543U, 2147452501U, 2147452487U, 2147452471U,
    2147452469U, 2147452457U, 2147452421U, 2147452387U, 2147452369U, 2147452343U, 2147452331U, 2147452303U,
    2147452261U, 2147452249U, 2147452217U, 2147452211U, 2147452193U, 2147452187U, 2147452171U, 2147452147U,
    2147452129U, 2147452127U, 2147452093U, 2147452061U, 2147452049U, 2147452033U, 2147452031U, 2147452009U,
    2147451961U, 2147451947U, 2147451937U, 2147451923U, 2147451899U, 2147451881U, 2147451857U, 2147451829U,
    2147451797U, 2147451751U, 2147451739U, 2147451697U, 2147451671U, 2147451659U, 2147451643U, 2147451617U,
    2147451601U, 2147451571U, 2147451569U, 2147451563U, 2147451517U, 2147451461U, 2147451457U, 2147451443U,
    2147451413U, 2147451409U, 2147451389U, 2147451367U, 2147451359U, 2147451349U, 2147451329U, 2147451311U,
    2147451289U, 2147451263U, 2147451211U, 2147451199U, 2147451139U, 2147451133U, 2147451121U, 2147451107U,
    2147451083U, 2147451049U, 2147451043U, 2147450993U, 2147450947U, 2147450933U, 2147450923U, 2147450861U,
    2147450843U, 2147450827U, 2147450803U, 2147450801U, 2147450779U, 2147450777U, 2147450741U, 2147450717U,
    2147450707U, 2147450689U, 2147450681U, 2147450677U, 2147450647U, 2147450629U, 2147450621U, 2147450603U,
    2147450597U, 2147450581U, 2147450579U, 2147450521U, 2147450519U, 2147450491U, 2147450483U, 2147450419U,
    2147450411U, 2147450369U, 2147450323U, 2147450293U, 2147450287U, 2147450267U, 2147450213U, 2147450209U,
    2147450189U, 2147450171U, 2147450159U, 2147450113U, 2147450027U, 2147449999U, 2147449961U, 2147449937U,
    2147449891U, 2147449849U, 2147449847U, 2147449823U, 2147449789U, 2147449783U, 2147449769U, 2147449753U,
    2147449751U, 2147449747U, 2147449723U, 2147449721U, 2147449649U, 2147449631U, 2147449607U, 2147449589U,
    2147449567U, 2147449517U, 2147449501U, 2147449417U, 2147449357U, 2147449321U, 2147449309U, 2147449279U,
    2147449229U, 2147449219U, 2147449207U, 2147449193U, 2147449153U, 2147449151U, 2147449133U, 2147449079U,
    2147449069U, 2147449039U, 2147449033U, 2147449013U, 2147448991U, 2147448977U, 2147448967U, 2147448937U,
    2147448929U, 2147448907U, 2147448899U, 2147448887U, 2147448881U, 2147448851U, 2147448763U, 2147448757U,
    2147448749U, 2147448733U, 2147448731U, 2147448713U, 2147448707U, 2147448703U, 2147448701U, 2147448679U,
    2147448671U, 2147448629U, 2147448593U, 2147448581U, 2147448577U, 2147448539U, 2147448473U, 2147448467U,
    2147448427U, 2147448409U, 2147448379U, 2147448367U, 2147448353U, 2147448323U, 2147448301U, 2147448287U,
    2147448257U, 2147448253U, 2147448197U, 2147448181U, 2147448101U, 2147448091U, 2147448071U, 2147448059U,
    2147448049U, 2147448031U, 2147448013U, 2147447987U, 2147447977U, 2147447933U, 2147447917U, 2147447899U,
    2147447881U, 2147447833U, 2147447807U, 2147447791U, 2147447777U, 2147447747U, 2147447723U, 2147447669U,
    2147447657U, 2147447641U, 2147447639U, 2147447609U, 2147447597U, 2147447573U, 2147447473U, 2147447459U,
    2147447453U, 2147447411U, 2147447389U, 2147447383U, 2147447363U, 2147447359U, 2147447347U, 2147447339U,
    2147447333U, 2147447321U, 2147447261U, 2147447251U, 2147447243U, 2147447231U, 2147447213U, 2147447179U,
    2147447171U, 2147447101U, 2147447017U, 2147447011U, 2147446997U, 2147446993U, 2147446991U, 2147446963U,
    2147446943U, 2147446927U, 2147446921U, 2147446871U, 2147446843U, 2147446841U, 2147446837U, 2147446831U,
    2147446793U, 2147446699U, 2147446687U, 2147446673U, 2147446669U, 2147446667U, 2147446661U, 2147446657U,
    2147446619U, 2147446571U, 2147446489U, 2147446439U, 2147446391U, 2147446373U, 2147446361U, 2147446351U,
    2147446339U, 2147446337U, 2147446321U, 2147446303U, 2147446297U, 2147446289U, 2147446283U, 2147446247U,
    2147446193U, 2147446181U, 2147446163U, 2147446159U, 2147446151U, 2147446141U, 2147446097U, 2147446087U,
    2147446079U, 2147446057U, 2147446039U, 2147446033U, 2147446009U, 2147446003U, 2147445983U, 2147445973U,
    2147445943U, 2147445917U, 2147445913U, 2147445893U, 2147445887U, 2147445869U, 2147445851U, 2147445823U,
    2147445799U, 2147445787U, 2147445709U, 2147445691U, 2147445689U, 2147445631U, 2147445589U, 2147445541U,
    2147445539U, 2147445533U, 2147445497U, 2147445473U, 2147445449U, 2147445437U, 2147445427U, 2147445401U,
    2147445373U, 2147445343U, 2147445319U, 2147445317U, 2147445283U, 2147445277U, 2147445239U, 2147445211U,
    2147445203U, 2147445191U, 2147445173U, 2147445143U, 2147445137U, 2147445121U, 2147445119U, 2147445103U,
    2147445101U, 2147445077U, 2147445029U, 2147445011U, 2147444977U, 2147444963U, 2147444941U, 2147444917U,
    2147444891U, 2147444851U, 2147444843U, 2147444833U, 2147444821U, 2147444797U, 2147444791U, 2147444773U,
    2147444713U, 2147444687U, 2147444669U, 2147444647U, 2147444633U, 2147444609U, 2147444603U, 2147444569U,
    2147444567U, 2147444561U, 2147444501U, 2147444479U, 2147444459U, 2147444441U, 2147444399U, 2147444389U,
    2147444359U, 2147444333U, 2147444317U, 2147444293U, 2147444291U, 2147444279U, 2147444251U, 2147444213U,
    2147444177U, 2147444161U, 2147444153U, 2147444107U, 2147444081U, 2147444077U, 2147444071U, 2147444041U,
    2147444021U, 2147444017U, 2147443931U, 2147443913U, 2147443799U, 2147443789U, 2147443787U, 2147443759U,
    2147443747U, 2147443729U, 2147443721U, 2147443679U, 2147443633U, 2147443603U, 2147443589U, 2147443579U,
    2147443567U, 2147443561U, 2147443547U, 2147443537U, 2147443523U, 2147443513U, 2147443471U, 2147443423U,
    2147443421U, 2147443411U, 2147443399U, 2147443391U, 2147443373U, 2147443357U, 2147443343U, 2147443339U,
    2147443303U, 2147443283U, 2147443223U, 2147443211U, 2147443171U, 2147443169U, 2147443163U, 2147443157U,
    2147443121U, 2147443087U, 2147443057U, 2147443049U, 2147443033U, 2147443021U, 2147443013U, 2147443003U,
    2147442989U, 2147442977U, 2147442961U, 2147442931U, 2147442901U, 2147442893U, 2147442851U, 2147442827U,
    2147442823U, 2147442811U, 2147442809U, 2147442797U, 2147442767U, 2147442763U, 2147442751U, 2147442697U,
    2147442677U, 2147442673U, 2147442637U, 2147442629U, 2147442623U, 2147442613U, 2147442559U, 2147442523U,
    2147442511U, 2147442487U, 2147442469U, 2147442467U, 2147442457U, 2147442433U, 2147442419U, 2147442413U,
    2147442391U, 2147442347U, 2147442331U, 2147442299U, 2147442289U, 2147442277U, 2147442221U, 2147442203U,
    2147442191U, 2147442179U, 2147442139U, 2147442131U, 2147442119U, 2147442071U, 2147442061U, 2147442053U,
    2147442043U, 2147442029U, 2147441999U, 2147441977U, 2147441971U, 2147441963U, 2147441903U, 2147441893U,
    2147441869U, 2147441867U, 2147441843U, 2147441839U, 2147441833U, 2147441831U, 2147441767U, 2147441749U,
    2147441711U, 2147441701U, 2147441671U, 2147441623U, 2147441587U, 2147441563U, 2147441539U, 2147441531U,
    2147441519U, 2147441507U, 2147441501U, 2147441453U, 2147441449U, 2147441423U, 2147441399U, 2147441357U,
    2147441347U, 2147441311U, 2147441281U, 2147441273U, 2147441251U, 2147441239U, 2147441209U, 2147441201U,
    2147441189U, 2147441167U, 2147441159U, 2147441147U, 2147441141U, 2147441137U, 2147441119U, 2147441099U,
    2147441063U, 2147441033U, 2147440991U, 2147440979U, 2147440973U, 2147440961U, 2147440957U, 2147440943U,
    2147440921U, 2147440903U, 2147440873U, 2147440853U, 2147440849U, 2147440847U, 2147440843U, 2147440837U,
    2147440829U, 2147440751U, 2147440733U, 2147440721U, 2147440703U, 2147440699U, 2147440643U, 2147440639U,
    2147440637U, 2147440621U, 2147440619U, 2147440579U, 2147440549U, 2147440469U, 2147440441U, 2147440433U,
    2147440429U, 2147440423U, 2147440409U, 2147440397U, 2147440367U, 2147440349U, 2147440261U, 2147440247U,
    2147440219U, 2147440201U, 2147440117U, 2147440109U, 2147440069U, 2147440049U, 2147440039U, 2147440027U,
    2147439991U, 2147439989U, 2147439979U, 2147439961U, 2147439953U, 2147439923U, 2147439911U, 2147439883U,
    2147439863U, 2147439859U, 2147439841U, 2147439803U, 2147439799U, 2147439731U, 2147439727U, 2147439709U,
    2147439653U, 2147439599U, 2147439583U, 2147439557U, 2147439523U, 2147439509U, 2147439491U, 2147439443U,
    2147439407U, 2147439401U, 2147439341U, 2147439331U, 2147439323U, 2147439293U, 2147439271U, 2147439251U,
    2147439227U, 2147439209U, 2147439187U, 2147439149U, 2147439143U, 2147439061U, 2147439017U, 2147438987U,
    2147438941U, 2147438927U, 2147438897U, 2147438873U, 2147438869U, 2147438833U, 2147438749U, 2147438743U,
    2147438731U, 2147438717U, 2147438707U, 2147438687U, 2147438681U, 2147438663U, 2147438633U, 2147438617U,
    2147438599U, 2147438563U, 2147438519U, 2147438483U, 2147438459U, 2147438441U, 2147438437U, 2147438393U,
    2147438389U, 2147438357U, 2147438353U, 2147438347U, 2147438303U, 2147438261U, 2147438207U, 2147438179U,
    2147438143U, 2147438123U, 2147438093U, 2147438077U, 2147438057U, 2147438053U, 2147438009U, 2147438003U,
    2147437997U, 2147437937U, 2147437889U, 2147437871U, 2147437843U, 2147437819U, 2147437811U, 2147437801U,
    2147437777U, 2147437769U, 2147437753U, 2147437751U, 2147437723U, 2147437651U, 2147437613U, 2147437609U,
    2147437601U, 2147437583U, 2147437577U, 2147437553U, 2147437531U, 2147437511U, 2147437493U, 2147437451U,
    2147437447U, 2147437429U, 2147437291U, 2147437283U, 2147437267U, 2147437217U, 2147437183U, 2147437181U,
    2147437147U, 2147437079U, 2147437073U, 2147437069U, 2147437027U, 2147437001U, 2147436997U, 2147436989U,
    2147436959U, 2147436931U, 2147436919U, 2147436901U, 2147436877U, 2147436871U, 2147436833U, 2147436793U,
    2147436751U, 2147436701U, 2147436667U, 2147436659U, 2147436611U, 2147436559U, 2147436517U, 2147436463U,
    2147436443U, 2147436427U, 2147436419U, 2147436397U, 2147436353U, 2147436337U, 2147436281U, 2147436217U,
    2147436199U, 2147436197U, 2147436143U, 2147436119U, 2147436103U, 2147436091U, 2147436079U, 2147436047U,
    2147436041U, 2147436037U, 2147436019U, 2147435987U, 2147435977U, 2147435959U, 2147435957U, 2147435951U,
    2147435929U, 2147435911U, 2147435897U, 2147435893U, 2147435891U, 2147435861U, 2147435809U, 2147435791U,
    2147435789U, 2147435783U, 2147435777U, 2147435737U, 2147435701U, 2147435623U, 2147435599U, 2147435569U,
    2147435539U, 2147435533U, 2147435527U, 2147435509U, 2147435501U, 2147435491U, 2147435483U, 2147435473U,
    2147435431U, 2147435417U, 2147435371U, 2147435327U, 2147435321U, 2147435299U, 2147435293U, 2147435287U,
    2147435281U, 2147435261U, 2147435249U, 2147435243U, 2147435201U, 2147435161U, 2147435149U, 2147435141U,
    2147435083U, 2147435071U, 2147435063U, 2147435057U, 2147435039U, 2147435009U, 2147434981U, 2147434979U,
    2147434943U, 2147434909U, 2147434907U, 2147434879U, 2147434871U, 2147434829U, 2147434811U, 2147434771U,
    2147434733U, 2147434727U, 2147434703U, 2147434691U, 2147434687U, 2147434673U, 2147434651U, 2147434603U,
    2147434579U, 2147434561U, 2147434529U, 2147434519U, 2147434517U, 2147434507U, 2147434483U, 2147434477U,
    2147434451U, 2147434439U, 2147434411U, 2147434391U, 2147434363U, 2147434361U, 2147434309U, 2147434291U,
    2147434279U, 2147434243U, 2147434217U, 2147434193U, 2147434153U, 2147434141U, 2147434127U, 2147434117U,
    2147434109U, 2147434103U, 2147434099U, 2147434063U, 2147434049U, 2147434043U, 2147434013U, 2147434007U,
    2147434001U, 2147433991U, 2147433947U, 2147433943U, 2147433929U, 2147433887U, 2147433811U, 2147433791U,
    2147433779U, 2147433719U, 2147433707U, 2147433703U, 2147433697U, 2147433667U, 2147433649U, 2147433583U,
    2147433577U, 2147433559U, 2147433551U, 2147433521U, 2147433517U, 2147433503U, 2147433487U, 2147433469U,
    2147433451U, 2147433401U, 2147433391U, 2147433389U, 2147433347U, 2147433317U, 2147433311U, 2147433263U,
    2147433247U, 2147433229U, 2147433227U, 2147433193U, 2147433173U, 2147433139U, 2147433137U, 2147433133U,
    2147433103U, 2147433091U, 2147433077U, 2147433031U, 2147433007U, 2147432999U, 2147432993U, 2147432981U,
    2147432951U, 2147432921U, 2147432909U, 2147432893U, 2147432873U, 2147432863U, 2147432767U, 2147432731U,
    2147432723U, 2147432699U, 2147432663U, 2147432627U, 2147432587U, 2147432561U, 2147432549U, 2147432531U,
    2147432509U, 2147432501U, 2147432479U, 2147432473U, 2147432389U, 2147432387U, 2147432369U, 2147432351U,
    2147432293U, 2147432239U, 2147432207U, 2147432173U, 2147432171U, 2147432149U, 2147432143U, 2147432137U,
    2147432123U, 2147432087U, 2147432069U, 2147432057U, 2147432051U, 2147432039U, 2147432009U, 2147431973U,
    2147431967U, 2147431963U, 2147431943U, 2147431939U, 2147431921U, 2147431879U, 2147431843U, 2147431837U,
    2147431831U, 2147431757U, 2147431751U, 2147431733U, 2147431709U, 2147431681U, 2147431669U, 2147431667U,
    2147431651U, 2147431633U, 2147431631U, 2147431613U, 2147431609U, 2147431579U, 2147431553U, 2147431543U,
    2147431541U, 2147431529U, 2147431513U, 2147431511U, 2147431477U, 2147431459U, 2147431453U, 2147431439U,
    2147431417U, 2147431393U, 2147431387U, 2147431367U, 2147431343U, 2147431337U, 2147431331U, 2147431259U,
    2147431213U, 2147431207U, 2147431199U, 2147431193U, 2147431171U, 2147431159U, 2147431147U, 2147431141U,
    2147431103U, 2147431093U, 2147431079U, 2147431073U, 2147431001U, 2147430991U, 2147430979U, 2147430941U,
    2147430917U, 2147430907U, 2147430899U, 2147430881U, 2147430841U, 2147430821U, 2147430757U, 2147430743U,
    2147430739U, 2147430721U, 2147430689U, 2147430653U, 2147430629U, 2147430617U, 2147430587U, 2147430583U,
    2147430563U, 2147430557U, 2147430553U, 2147430547U, 2147430529U, 2147430503U, 2147430499U, 2147430487U,
    2147430437U, 2147430413U, 2147430379U, 2147430371U, 2147430353U, 2147430349U, 2147430317U, 2147430283U,
    2147430281U, 2147430253U, 2147430239U, 2147430221U, 2147430209U, 2147430169U, 2147430163U, 2147430149U,
    2147430127U, 2147430113U, 2147430101U, 2147430083U, 2147430079U, 2147430073U, 2147430071U, 2147430049U,
    2147430011U, 2147430007U, 2147430001U, 2147429993U, 2147429969U, 2147429897U, 2147429881U, 2147429863U,
    2147429849U, 2147429839U, 2147429827U, 2147429807U, 2147429803U, 2147429743U, 2147429689U, 2147429659U,
    2147429633U, 2147429621U, 2147429611U, 2147429563U, 2147429561U, 2147429467U, 2147429441U, 2147429413U,
    2147429363U, 2147429353U, 2147429351U, 2147429311U, 2147429309U, 2147429281U, 2147429237U, 2147429233U,
    2147429213U, 2147429197U, 2147429183U, 2147429173U, 2147429147U, 2147429131U, 2147429071U, 2147429057U,
    2147429047U, 2147429023U, 2147429003U, 2147428999U, 2147428991U, 2147428981U, 2147428957U, 2147428949U,
    2147428891U, 2147428861U, 2147428837U, 2147428823U, 2147428819U, 2147428793U, 2147428783U, 2147428739U,
    2147428727U, 2147428709U, 2147428687U, 2147428561U, 2147428537U, 2147428523U, 2147428519U, 2147428489U,
    2147428433U, 2147428421U, 2147428403U, 2147428363U, 2147428343U, 2147428333U, 2147428307U, 2147428277U,
    2147428267U, 2147428243U, 2147428193U, 2147428181U, 2147428147U, 2147428139U, 2147428109U, 2147428099U,
    2147428093U, 2147428069U, 2147428027U, 2147428021U, 2147427973U, 2147427949U, 2147427929U, 2147427923U,
    2147427911U, 2147427907U, 2147427901U, 2147427883U, 2147427859U, 2147427847U, 2147427839U, 2147427827U,
    2147427797U, 2147427781U, 2147427727U, 2147427703U, 2147427701U, 2147427679U, 2147427677U, 2147427647U,
    2147427643U, 2147427593U, 2147427563U, 2147427551U, 2147427473U, 2147427427U, 2147427397U, 2147427229U,
    2147427221U, 2147427209U, 2147427173U, 2147427169U, 2147427157U, 2147427151U, 2147427137U, 2147427091U,
    2147427083U, 2147427047U, 2147427043U, 2147427041U, 2147427001U, 2147426989U, 2147426971U, 2147426951U,
    2147426843U, 2147426821U, 2147426747U, 2147426693U, 2147426681U, 2147426669U, 2147426657U, 2147426651U,
    2147426641U, 2147426629U, 2147426623U, 2147426573U, 2147426557U, 2147426551U, 2147426543U, 2147426527U,
    2147426521U, 2147426497U, 2147426471U, 2147426467U, 2147426459U, 2147426419U, 2147426401U, 2147426399U,
    2147426377U, 2147426353U, 2147426339U, 2147426329U, 2147426317U, 2147426263U, 2147426243U, 2147426221U,
    2147426207U, 2147426167U, 2147426161U, 2147426159U, 2147426153U, 2147426147U, 2147426143U, 2147426137U,
    2147426117U, 2147426107U, 2147426081U, 2147426053U, 2147426003U, 2147425993U, 2147425979U, 2147425937U,
    2147425933U, 2147425879U, 2147425871U, 2147425853U, 2147425759U, 2147425729U, 2147425711U, 2147425681U,
    2147425663U, 2147425607U, 2147425591U, 2147425559U, 2147425541U, 2147425531U, 2147425519U, 2147425513U,
    2147425507U, 2147425457U, 2147425453U, 2147425447U, 2147425411U, 2147425393U, 2147425381U, 2147425349U,
    2147425333U, 2147425309U, 2147425297U, 2147425283U, 2147425249U, 2147425243U, 2147425237U, 2147425213U,
    2147425187U, 2147425169U, 2147425139U, 2147425127U, 2147425123U, 2147425121U, 2147425103U, 2147425073U,
    2147425067U, 2147425001U, 2147424949U, 2147424913U, 2147424899U, 2147424893U, 2147424869U, 2147424863U,
    2147424827U, 2147424817U, 2147424809U, 2147424793U, 2147424787U, 2147424709U, 2147424641U, 2147424589U,
    2147424583U, 2147424577U, 2147424563U, 2147424557U, 2147424551U, 2147424533U, 2147424523U, 2147424511U,
    2147424481U, 2147424469U, 2147424431U, 2147424427U, 2147424359U, 2147424353U, 2147424329U, 2147424311U,
    2147424299U, 2147424287U, 2147424259U, 2147424247U, 2147424203U, 2147424179U, 2147424143U, 2147424133U,
    2147424127U, 2147424113U, 2147424107U, 2147424101U, 2147424079U, 2147424073U, 2147424047U, 2147424029U,
    2147424011U, 2147424007U, 2147423983U, 2147423963U, 2147423959U, 2147423953U, 2147423917U, 2147423893U,
    2147423881U, 2147423851U, 2147423849U, 2147423821U, 2147423771U, 2147423753U, 2147423743U, 2147423717U,
    2147423713U, 2147423711U, 2147423701U, 2147423693U, 2147423689U, 2147423683U, 2147423671U, 2147423659U,
    2147423651U, 2147423647U, 2147423627U, 2147423587U, 2147423573U, 2147423563U, 2147423557U, 2147423533U,
    2147423513U, 2147423507U, 2147423489U, 2147423477U, 2147423461U, 2147423431U, 2147423423U, 2147423363U,
    2147423347U, 2147423309U, 2147423303U, 2147423293U, 2147423281U, 2147423273U, 2147423269U, 2147423249U,
    2147423197U, 2147423189U, 2147423183U, 2147423143U, 2147423137U, 2147423099U, 2147423087U, 2147423027U,
    2147423021U, 2147423009U, 2147422987U, 2147422933U, 2147422897U, 2147422891U, 2147422873U, 2147422861U,
    2147422819U, 2147422817U, 2147422811U, 2147422789U, 2147422777U, 2147422747U, 2147422727U, 2147422723U,
    2147422703U, 2147422691U, 2147422679U, 2147422663U, 2147422657U, 2147422649U, 2147422633U, 2147422603U,
    2147422573U, 2147422559U, 2147422549U, 2147422493U, 2147422489U, 2147422481U, 2147422471U, 2147422463U,
    2147422457U, 2147422441U, 2147422429U, 2147422373U, 2147422369U, 2147422357U, 2147422331U, 2147422271U,
    2147422241U, 2147422229U, 2147422219U, 2147422213U, 2147422183U, 2147422153U, 2147422139U, 2147422129U,
    2147422127U, 2147422097U, 2147422087U, 2147422063U, 2147422061U, 2147422037U, 2147422033U, 2147422019U,
    2147421989U, 2147421953U, 2147421911U, 2147421907U, 2147421893U, 2147421883U, 2147421853U, 2147421833U,
    2147421769U, 2147421737U, 2147421721U, 2147421709U, 2147421697U, 2147421673U, 2147421649U, 2147421607U,
    2147421593U, 2147421581U, 2147421571U, 2147421541U, 2147421527U, 2147421517U, 2147421481U, 2147421469U,
    2147421461U, 2147421457U, 2147421449U, 2147421383U, 2147421379U, 2147421373U, 2147421349U, 2147421343U,
    2147421337U, 2147421329U, 2147421301U, 2147421277U, 2147421271U, 2147421259U, 2147421253U, 2147421233U,
    2147421209U, 2147421179U, 2147421167U, 2147421149U, 2147421127U, 2147421121U, 2147421091U, 2147421077U,
    2147421049U, 2147421047U, 2147421041U, 2147421019U, 2147420999U, 2147420963U, 2147420959U, 2147420939U,
    2147420923U, 2147420917U, 2147420887U, 2147420857U, 2147420789U, 2147420777U, 2147420767U, 2147420753U,
    2147420749U, 2147420729U, 2147420719U, 2147420683U, 2147420669U, 2147420657U, 2147420593U, 2147420533U,
    2147420477U, 2147420447U, 2147420419U, 2147420389U, 2147420371U, 2147420321U, 2147420293U, 2147420291U,
    2147420273U, 2147420269U, 2147420183U, 2147420179U, 2147420167U, 2147420153U, 2147420123U, 2147420111U,
    2147420069U, 2147420057U, 2147420017U, 2147419997U, 2147419993U, 2147419987U, 2147419979U, 2147419961U,
    2147419951U, 2147419943U, 2147419933U, 2147419891U, 2147419877U, 2147419867U, 2147419849U, 2147419819U,
    2147419793U, 2147419733U, 2147419721U, 2147419627U, 2147419619U, 2147419609U, 2147419607U, 2147419559U,
    2147419553U, 2147419543U, 2147419537U, 2147419529U, 2147419493U, 2147419489U, 2147419457U, 2147419453U,
    2147419399U, 2147419397U, 2147419363U, 2147419361U, 2147419327U, 2147419301U, 2147419291U, 2147419249U,
    2147419247U, 2147419229U, 2147419189U, 2147419151U, 2147419147U, 2147419139U, 2147419129U, 2147419111U,
    2147419033U, 2147419019U, 2147418979U, 2147418961U, 2147418947U, 2147418859U, 2147418853U, 2147418841U,
    2147418827U, 2147418821U, 2147418803U, 2147418797U, 2147418719U, 2147418683U, 2147418677U, 2147418653U,
    2147418641U, 2147418629U, 2147418619U, 2147418607U, 2147418599U, 2147418521U, 2147418517U, 2147418509U,
    2147418503U, 2147418487U, 2147418473U, 2147418463U, 2147418421U, 2147418373U, 2147418349U, 2147418347U,
    2147418341U, 2147418313U, 2147418307U, 2147418283U, 2147418277U, 2147418227U, 2147418199U, 2147418191U,
    2147418179U, 2147418137U, 2147418131U, 2147418127U, 2147418083U, 2147418079U, 2147418067U, 2147418043U,
    2147418041U, 2147418037U, 2147418011U, 2147418001U, 2147417969U, 2147417941U, 2147417939U, 2147417929U,
    2147417911U, 2147417903U, 2147417869U, 2147417819U, 2147417813U, 2147417773U, 2147417759U, 2147417717U,
    2147417707U, 2147417693U, 2147417669U, 2147417663U, 2147417653U, 2147417593U, 2147417551U, 2147417539U,
    2147417527U, 2147417521U, 2147417453U, 2147417443U, 2147417423U, 2147417383U, 2147417381U, 2147417351U,
    2147417329U, 2147417303U, 2147417267U, 2147417179U, 2147417171U, 2147417141U, 2147417117U, 2147417113U,
    2147417093U, 2147417053U, 2147417023U, 2147416991U, 2147416987U, 2147416979U, 2147416967U, 2147416963U,
    2147416949U, 2147416927U, 2147416907U, 2147416883U, 2147416877U, 2147416867U, 2147416823U, 2147416813U,
    2147416807U, 2147416783U, 2147416771U, 2147416769U, 2147416759U, 2147416721U, 2147416709U, 2147416703U,
    2147416657U, 2147416637U, 2147416589U, 2147416573U, 2147416561U, 2147416559U, 2147416553U, 2147416519U,
    2147416507U, 2147416483U, 2147416477U, 2147416441U, 2147416379U, 2147416357U, 2147416343U, 2147416339U,
    2147416301U, 2147416267U, 2147416241U, 2147416223U, 2147416213U, 2147416207U, 2147416189U, 2147416181U,
    2147416177U, 2147416163U, 2147416147U, 2147416133U, 2147416121U, 2147416111U, 2147416109U, 2147416079U,
    2147416067U, 2147416057U, 2147416031U, 2147416003U, 2147415989U, 2147415943U, 2147415931U, 2147415889U,
    2147415883U, 2147415859U, 2147415857U, 2147415839U, 2147415817U, 2147415811U, 2147415773U, 2147415749U,
    2147415737U, 2147415719U, 2147415709U, 2147415703U, 2147415659U, 2147415629U, 2147415619U, 2147415617U,
    2147415607U, 2147415563U, 2147415559U, 2147415553U, 2147415541U, 2147415533U, 2147415527U, 2147415499U,
    2147415463U, 2147415451U, 2147415449U, 2147415443U, 2147415427U, 2147415373U, 2147415343U, 2147415337U,
    2147415323U, 2147415311U, 2147415307U, 2147415203U, 2147415181U, 2147415119U, 2147415107U, 2147415059U,
    2147415047U, 2147415041U, 2147415029U, 2147415019U, 2147415013U, 2147414999U, 2147414977U, 2147414953U,
    2147414947U, 2147414839U, 2147414837U, 2147414807U, 2147414791U, 2147414767U, 2147414723U, 2147414699U,
    2147414651U, 2147414641U, 2147414629U, 2147414617U, 2147414603U, 2147414567U, 2147414531U, 2147414519U,
    2147414513U, 2147414509U, 2147414497U, 2147414461U, 2147414441U, 2147414411U, 2147414407U, 2147414377U,
    2147414369U, 2147414363U, 2147414317U, 2147414233U, 2147414231U, 2147414207U, 2147414201U, 2147414189U,
    2147414183U, 2147414117U, 2147414057U, 2147414053U, 2147413993U, 2147413981U, 2147413979U, 2147413949U,
    2147413913U, 2147413903U, 2147413889U, 2147413867U, 2147413859U, 2147413813U, 2147413781U, 2147413757U,
    2147413753U, 2147413739U, 2147413729U, 2147413711U, 2147413661U, 2147413657U, 2147413651U, 2147413603U,
    2147413559U, 2147413553U, 2147413529U, 2147413519U, 2147413441U, 2147413381U, 2147413343U, 2147413309U,
    2147413297U, 2147413291U, 2147413283U, 2147413277U, 2147413273U, 2147413223U, 2147413211U, 2147413201U,
    2147413153U, 2147413139U, 2147413109U, 2147413061U, 2147413049U, 2147413001U, 2147412989U, 2147412979U,
    2147412977U, 2147412973U, 2147412961U, 2147412947U, 2147412929U, 2147412899U, 2147412877U, 2147412833U,
    2147412797U, 2147412791U, 2147412731U, 2147412721U, 2147412691U, 2147412689U, 2147412671U, 2147412667U,
    2147412637U, 2147412629U, 2147412601U, 2147412599U, 2147412593U, 2147412581U, 2147412577U, 2147412539U,
    2147412521U, 2147412493U, 2147412479U, 2147412467U, 2147412461U, 2147412451U, 2147412413U, 2147412403U,
    2147412361U, 2147412359U, 2147412347U, 2147412301U, 2147412277U, 2147412263U, 2147412257U, 2147412247U,
    2147412233U, 2147412229U, 2147412209U, 2147412149U, 2147412143U, 2147412133U, 2147412037U, 2147412017U,
    2147411963U, 2147411953U, 2147411911U, 2147411887U, 2147411879U, 2147411857U, 2147411839U, 2147411821U,
    2147411789U, 2147411743U, 2147411723U, 2147411713U, 2147411683U, 2147411657U, 2147411639U, 2147411621U,
    2147411603U, 2147411579U, 2147411561U, 2147411557U, 2147411551U, 2147411549U, 2147411533U, 2147411527U,
    2147411501U, 2147411477U, 2147411473U, 2147411471U, 2147411429U, 2147411359U, 2147411339U, 2147411333U,
    2147411297U, 2147411263U, 2147411251U, 2147411221U, 2147411213U, 2147411209U, 2147411183U, 2147411087U,
    2147411033U, 2147411011U, 2147411009U, 2147411003U, 2147410973U, 2147410963U, 2147410949U, 2147410891U,
    2147410873U, 2147410849U, 2147410829U, 2147410823U, 2147410817U, 2147410813U, 2147410789U, 2147410781U,
    2147410757U, 2147410753U, 2147410729U, 2147410717U, 2147410687U, 2147410679U, 2147410673U, 2147410649U,
    2147410637U, 2147410621U, 2147410619U, 2147410597U, 2147410567U, 2147410543U, 2147410537U, 2147410523U,
    2147410483U, 2147410481U, 2147410451U, 2147410379U, 2147410373U, 2147410351U, 2147410339U, 2147410333U,
    2147410327U, 2147410313U, 2147410297U, 2147410273U, 2147410271U, 2147410253U, 2147410247U, 2147410217U,
    2147410163U, 2147410159U, 2147410127U, 2147410051U, 2147410043U, 2147410037U, 2147410007U, 2147409989U,
    2147409977U, 2147409967U, 2147409949U, 2147409907U, 2147409899U, 2147409871U, 2147409841U, 2147409799U,
    2147409793U, 2147409787U, 2147409751U, 2147409721U, 2147409713U, 2147409707U, 2147409653U, 2147409647U,
    2147409631U, 2147409629U, 2147409623U, 2147409619U, 2147409601U, 2147409577U, 2147409547U, 2147409541U,
    2147409499U, 2147409493U, 2147409491U, 2147409457U, 2147409443U, 2147409409U, 2147409403U, 2147409389U,
    2147409373U, 2147409361U, 2147409353U, 2147409343U, 2147409337U, 2147409323U, 2147409311U, 2147409301U,
    2147409287U, 2147409263U, 2147409239U, 2147409217U, 2147409181U, 2147409167U, 2147409163U, 2147409157U,
    2147409137U, 2147409113U, 2147409083U, 2147409067U, 2147409049U, 2147409041U, 2147409031U, 2147408981U,
    2147408957U, 2147408911U, 2147408909U, 2147408881U, 2147408827U, 2147408779U, 2147408761U, 2147408749U,
    2147408741U, 2147408729U, 2147408717U, 2147408713U, 2147408707U, 2147408699U, 2147408629U, 2147408621U,
    2147408609U, 2147408591U, 2147408587U, 2147408563U, 2147408551U, 2147408531U, 2147408513U, 2147408507U,
    2147408467U, 2147408441U, 2147408387U, 2147408339U, 2147408323U, 2147408321U, 2147408303U, 2147408299U,
    2147408293U, 2147408279U, 2147408273U, 2147408267U, 2147408243U, 2147408233U, 2147408209U, 2147408201U,
    2147408171U, 2147408143U, 2147408111U, 2147408093U, 2147408083U, 2147408027U, 2147408017U, 2147407991U,
    2147407973U, 2147407939U, 2147407907U, 2147407891U, 2147407877U, 2147407861U, 2147407807U, 2147407799U,
    2147407793U, 2147407741U, 2147407699U, 2147407697U, 2147407681U, 2147407667U, 2147407657U, 2147407621U,
    2147407609U, 2147407543U, 2147407463U, 2147407439U, 2147407429U, 2147407403U, 2147407337U, 2147407333U,
    2147407319U, 2147407279U, 2147407271U, 2147407261U, 2147407253U, 2147407193U, 2147407177U, 2147407153U,
    2147407133U, 2147407127U, 2147407117U, 2147407069U, 2147407039U, 2147407033U, 2147407027U, 2147407013U,
    2147407001U, 2147406997U, 2147406991U, 2147406979U, 2147406953U, 2147406931U, 2147406917U, 2147406869U,
    2147406839U, 2147406827U, 2147406823U, 2147406817U, 2147406773U, 2147406769U, 2147406757U, 2147406739U,
    2147406721U, 2147406643U, 2147406631U, 2147406623U, 2147406601U, 2147406589U, 2147406553U, 2147406517U,
    2147406511U, 2147406497U, 2147406491U, 2147406463U, 2147406451U, 2147406409U, 2147406397U, 2147406379U,
    2147406367U, 2147406341U, 2147406319U, 2147406281U, 2147406229U, 2147406223U, 2147406199U, 2147406193U,
    2147406167U, 2147406161U, 2147406139U, 2147406101U, 2147406061U, 2147406059U, 2147406047U, 2147406031U,
    2147405993U, 2147405987U, 2147405977U, 2147405947U, 2147405921U, 2147405917U, 2147405893U, 2147405801U,
    2147405759U, 2147405747U, 2147405693U, 2147405657U, 2147405591U, 2147405573U, 2147405569U, 2147405563U,
    2147405531U, 2147405527U, 2147405503U, 2147405471U, 2147405467U, 2147405461U, 2147405417U, 2147405389U,
    2147405357U, 2147405353U, 2147405333U, 2147405329U, 2147405291U, 2147405279U, 2147405243U, 2147405237U,
    2147405209U, 2147405203U, 2147405173U, 2147405131U, 2147405129U, 2147405119U, 2147405111U, 2147405107U,
    2147405063U, 2147405017U, 2147405003U, 2147404991U, 2147404981U, 2147404957U, 2147404943U, 2147404933U,
    2147404901U, 2147404891U, 2147404859U, 2147404841U, 2147404829U, 2147404771U, 2147404711U, 2147404639U,
    2147404621U, 2147404619U, 2147404601U, 2147404583U, 2147404579U, 2147404577U, 2147404489U, 2147404447U,
    2147404439U, 2147404429U, 2147404393U, 2147404381U, 2147404349U, 2147404331U, 2147404327U, 2147404319U,
    2147404309U, 2147404247U, 2147404243U, 2147404229U, 2147404211U, 2147404183U, 2147404157U, 2147404153U,
    2147404141U, 2147404121U, 2147404099U, 2147404067U, 2147404037U, 2147404031U, 2147404019U, 2147404001U,
    2147403983U, 2147403953U, 2147403893U, 2147403889U, 2147403887U, 2147403859U, 2147403857U, 2147403781U,
    2147403779U, 2147403737U, 2147403719U, 2147403701U, 2147403673U, 2147403593U, 2147403581U, 2147403563U,
    2147403547U, 2147403529U, 2147403509U, 2147403497U, 2147403469U, 2147403457U, 2147403409U, 2147403407U,
    2147403403U, 2147403383U, 2147403343U, 2147403341U, 2147403311U, 2147403283U, 2147403217U, 2147403179U,
    2147403143U, 2147403121U, 2147403103U, 2147403061U, 2147403007U, 2147402993U, 2147402989U, 2147402977U,
    2147402951U, 2147402941U, 2147402927U, 2147402911U, 2147402899U, 2147402869U, 2147402833U, 2147402827U,
    2147402791U, 2147402783U, 2147402779U, 2147402771U, 2147402711U, 2147402689U, 2147402687U, 2147402683U,
    2147402611U, 2147402603U, 2147402563U, 2147402507U, 2147402489U, 2147402479U, 2147402443U, 2147402437U,
    2147402423U, 2147402419U, 2147402417U, 2147402407U, 2147402381U, 2147402377U, 2147402371U, 2147402357U,
    2147402329U, 2147402297U, 2147402269U, 2147402267U, 2147402239U, 2147402221U, 2147402203U, 2147402177U,
    2147402161U, 2147402119U, 2147402099U, 2147402027U, 2147402009U, 2147401973U, 2147401957U, 2147401951U,
    2147401943U, 2147401933U, 2147401891U, 2147401807U, 2147401769U, 2147401759U, 2147401747U, 2147401741U,
    2147401721U, 2147401709U, 2147401681U, 2147401667U, 2147401661U, 2147401591U, 2147401573U, 2147401567U,
    2147401549U, 2147401513U, 2147401499U, 2147401457U, 2147401447U, 2147401441U, 2147401369U, 2147401343U,
    2147401327U, 2147401313U, 2147401307U, 2147401303U, 2147401271U, 2147401253U, 2147401241U, 2147401213U,
    2147401181U, 2147401171U, 2147401169U, 2147401163U, 2147401129U, 2147401103U, 2147401099U, 2147401021U,
    2147400991U, 2147400977U, 2147400973U, 2147400949U, 2147400943U, 2147400889U, 2147400877U, 2147400847U,
    2147400821U, 2147400803U, 2147400799U, 2147400769U, 2147400763U, 2147400743U, 2147400683U, 2147400643U,
    2147400637U, 2147400623U, 2147400599U, 2147400583U, 2147400571U, 2147400511U, 2147400481U, 2147400469U,
    2147400457U, 2147400449U, 2147400433U, 2147400397U, 2147400377U, 2147400361U, 2147400337U, 2147400331U,
    2147400329U, 2147400301U, 2147400293U, 2147400239U, 2147400217U, 2147400139U, 2147400127U, 2147400113U,
    2147400089U, 2147400071U, 2147400053U, 2147400011U, 2147400001U, 2147399983U, 2147399981U, 2147399959U,
    2147399957U, 2147399927U, 2147399923U, 2147399909U, 2147399851U, 2147399843U, 2147399819U, 2147399809U,
    2147399803U, 2147399789U, 2147399777U, 2147399767U, 2147399759U, 2147399753U, 2147399731U, 2147399719U,
    2147399711U, 2147399701U, 2147399699U, 2147399689U, 2147399671U, 2147399663U, 2147399629U, 2147399603U,
    2147399593U, 2147399587U, 2147399581U, 2147399561U, 2147399533U, 2147399521U, 2147399519U, 2147399509U,
    2147399491U, 2147399461U, 2147399447U, 2147399431U, 2147399407U, 2147399383U, 2147399381U, 2147399363U,
    2147399329U, 2147399263U, 2147399227U, 2147399203U, 2147399197U, 2147399167U, 2147399161U, 2147399153U,
    2147399147U, 2147399141U, 2147399123U, 2147399113U, 2147399087U, 2147399069U, 2147399063U, 2147399053U,
    2147399021U, 2147399017U, 2147398997U, 2147398969U, 2147398963U, 2147398949U, 2147398919U, 2147398849U,
    2147398819U, 2147398783U, 2147398769U, 2147398681U, 2147398679U, 2147398667U, 2147398597U, 2147398577U,
    2147398559U, 2147398553U, 2147398549U, 2147398531U, 2147398529U, 2147398507U, 2147398501U, 2147398387U,
    2147398361U, 2147398321U, 2147398313U, 2147398283U, 2147398277U, 2147398261U, 2147398229U, 2147398219U,
    2147398207U, 2147398157U, 2147398109U, 2147398091U, 2147398081U, 2147398079U, 2147398021U, 2147398009U,
    2147397997U, 2147397953U, 2147397947U, 2147397943U, 2147397883U, 2147397881U, 2147397877U, 2147397859U,
    2147397853U, 2147397827U, 2147397821U, 2147397817U, 2147397809U, 2147397787U, 2147397751U, 2147397743U,
    2147397731U, 2147397677U, 2147397643U, 2147397589U, 2147397587U, 2147397569U, 2147397563U, 2147397557U,
    2147397541U, 2147397479U, 2147397463U, 2147397443U, 2147397437U, 2147397433U, 2147397409U, 2147397383U,
    2147397361U, 2147397359U, 2147397353U, 2147397289U, 2147397283U, 2147397281U, 2147397269U, 2147397257U,
    2147397209U, 2147397199U, 2147397193U, 2147397137U, 2147397097U, 2147397071U, 2147397029U, 2147397019U,
    2147397011U, 2147396989U, 2147396987U, 2147396963U, 2147396921U, 2147396903U, 2147396897U, 2147396893U,
    2147396887U, 2147396869U, 2147396857U, 2147396827U, 2147396819U, 2147396807U, 2147396761U, 2147396759U,
    2147396749U, 2147396711U, 2147396687U, 2147396659U, 2147396623U, 2147396621U, 2147396609U, 2147396579U,
    2147396569U, 2147396561U, 2147396557U, 2147396533U, 2147396521U, 2147396513U, 2147396441U, 2147396413U,
    2147396411U, 2147396401U, 2147396399U, 2147396353U, 2147396351U, 2147396341U, 2147396323U, 2147396309U,
    2147396281U, 2147396267U, 2147396243U, 2147396227U, 2147396213U, 2147396203U, 2147396189U, 2147396179U,
    2147396159U, 2147396129U, 2147396077U, 2147396063U, 2147396057U, 2147396051U, 2147396039U, 2147395969U,
    2147395961U, 2147395949U, 2147395937U, 2147395927U, 2147395907U, 2147395891U, 2147395841U, 2147395829U,
    2147395777U, 2147395771U, 2147395729U, 2147395721U, 2147395709U, 2147395703U, 2147395697U, 2147395669U,
    2147395661U, 2147395651U, 2147395633U, 2147395631U, 2147395609U, 2147395589U, 2147395553U, 2147395499U,
    2147395489U, 2147395487U, 2147395427U, 2147395423U, 2147395421U, 2147395417U, 2147395379U, 2147395373U,
    2147395343U, 2147395331U, 2147395309U, 2147395303U, 2147395297U, 2147395291U, 2147395259U, 2147395241U,
    2147395193U, 2147395147U, 2147395123U, 2147395043U, 2147395039U, 2147394979U, 2147394973U, 2147394961U,
    2147394959U, 2147394947U, 2147394917U, 2147394913U, 2147394889U, 2147394869U, 2147394853U, 2147394811U,
    2147394761U, 2147394749U, 2147394719U, 2147394631U, 2147394619U, 2147394617U, 2147394589U, 2147394577U,
    2147394569U, 2147394553U, 2147394551U, 2147394547U, 2147394539U, 2147394533U, 2147394527U, 2147394479U,
    2147394467U, 2147394461U, 2147394427U, 2147394373U, 2147394371U, 2147394341U, 2147394289U, 2147394283U,
    2147394281U, 2147394259U, 2147394247U, 2147394239U, 2147394217U, 2147394199U, 2147394187U, 2147394173U,
    2147394167U, 2147394131U, 2147394127U, 2147394097U, 2147394089U, 2147394043U, 2147394023U, 2147394017U,
    2147393959U, 2147393929U, 2147393921U, 2147393909U, 2147393881U, 2147393867U, 2147393863U, 2147393861U,
    2147393767U, 2147393761U, 2147393747U, 2147393701U, 2147393693U, 2147393687U, 2147393683U, 2147393681U,
    2147393671U, 2147393659U, 2147393639U, 2147393621U, 2147393609U, 2147393561U, 2147393533U, 2147393489U,
    2147393461U, 2147393453U, 2147393449U, 2147393447U, 2147393419U, 2147393401U, 2147393399U, 2147393393U,
    2147393377U, 2147393371U, 2147393359U, 2147393351U, 2147393317U, 2147393299U, 2147393291U, 2147393273U,
    2147393257U, 2147393249U, 2147393221U, 2147393201U, 2147393179U, 2147393147U, 2147393141U, 2147393099U,
    2147393093U, 2147393051U, 2147393009U, 2147392993U, 2147392991U, 2147392981U, 2147392903U, 2147392883U,
    2147392879U, 2147392873U, 2147392853U, 2147392843U, 2147392829U, 2147392811U, 2147392789U, 2147392721U,
    2147392703U, 2147392697U, 2147392669U, 2147392591U, 2147392571U, 2147392561U, 2147392547U, 2147392543U,
    2147392531U, 2147392487U, 2147392469U, 2147392409U, 2147392399U, 2147392391U, 2147392367U, 2147392337U,
    2147392301U, 2147392283U, 2147392271U, 2147392253U, 2147392249U, 2147392243U, 2147392201U, 2147392189U,
    2147392153U, 2147392151U, 2147392147U, 2147392139U, 2147392129U, 2147392069U, 2147392031U, 2147392021U,
    2147391991U, 2147391973U, 2147391931U, 2147391889U, 2147391863U, 2147391859U, 2147391847U, 2147391833U,
    2147391811U, 2147391787U, 2147391781U, 2147391773U, 2147391751U, 2147391721U, 2147391713U, 2147391709U,
    2147391691U, 2147391683U, 2147391641U, 2147391637U, 2147391629U, 2147391583U, 2147391569U, 2147391563U,
    2147391559U, 2147391551U, 2147391511U, 2147391487U, 2147391461U, 2147391409U, 2147391403U, 2147391383U,
    2147391353U, 2147391349U, 2147391347U, 2147391331U, 2147391313U, 2147391299U, 2147391283U, 2147391271U,
    2147391269U, 2147391247U, 2147391241U, 2147391209U, 2147391203U, 2147391187U, 2147391161U, 2147391121U,
    2147391107U, 2147391011U, 2147390977U, 2147390939U, 2147390933U, 2147390923U, 2147390897U, 2147390873U,
    2147390827U, 2147390789U, 2147390783U, 2147390779U, 2147390737U, 2147390731U, 2147390671U, 2147390657U,
    2147390639U, 2147390629U, 2147390627U, 2147390617U, 2147390611U, 2147390599U, 2147390587U, 2147390563U,
    2147390489U, 2147390447U, 2147390437U, 2147390419U, 2147390387U, 2147390363U, 2147390341U, 2147390327U,
    2147390291U, 2147390281U, 2147390257U, 2147390249U, 2147390233U, 2147390213U, 2147390209U, 2147390183U,
    2147390149U, 2147390117U, 2147390111U, 2147390107U, 2147389991U, 2147389967U, 2147389961U, 2147389957U,
    2147389939U, 2147389931U, 2147389919U, 2147389903U, 2147389897U, 2147389891U, 2147389877U, 2147389843U,
    2147389819U, 2147389781U, 2147389763U, 2147389753U, 2147389691U, 2147389679U, 2147389631U, 2147389619U,
    2147389591U, 2147389579U, 2147389577U, 2147389523U, 2147389501U, 2147389483U, 2147389471U, 2147389441U,
    2147389421U, 2147389417U, 2147389403U, 2147389399U, 2147389369U, 2147389351U, 2147389333U, 2147389331U,
    2147389327U, 2147389267U, 2147389219U, 2147389213U, 2147389183U, 2147389159U, 2147389151U, 2147389147U,
    2147389141U, 2147389121U, 2147389109U, 2147389103U, 2147389067U, 2147389033U, 2147389019U, 2147388979U,
    2147388961U, 2147388953U, 2147388923U, 2147388871U, 2147388851U, 2147388829U, 2147388809U, 2147388791U,
    2147388773U, 2147388769U, 2147388751U, 2147388731U, 2147388709U, 2147388703U, 2147388701U, 2147388679U,
    2147388611U, 2147388577U, 2147388563U, 2147388559U, 2147388497U, 2147388487U, 2147388479U, 2147388437U,
    2147388431U, 2147388427U, 2147388413U, 2147388409U, 2147388403U, 2147388389U, 2147388377U, 2147388329U,
    2147388323U, 2147388319U, 2147388301U, 2147388253U, 2147388251U, 2147388241U, 2147388239U, 2147388233U,
    2147388211U, 2147388209U, 2147388179U, 2147388119U, 2147388107U, 2147388101U, 2147388097U, 2147388083U,
    2147388049U, 2147388043U, 2147388041U, 2147388007U, 2147387959U, 2147387947U, 2147387933U, 2147387903U,
    2147387897U, 2147387857U, 2147387839U, 2147387821U, 2147387791U, 2147387743U, 2147387741U, 2147387729U,
    2147387719U, 2147387713U, 2147387699U, 2147387677U, 2147387651U, 2147387647U, 2147387629U, 2147387609U,
    2147387573U, 2147387531U, 2147387507U, 2147387503U, 2147387441U, 2147387413U, 2147387393U, 2147387383U,
    2147387339U, 2147387323U, 2147387299U, 2147387279U, 2147387257U, 2147387227U, 2147387219U, 2147387213U,
    2147387153U, 2147387131U, 2147387083U, 2147387063U, 2147387059U, 2147387029U, 2147387017U, 2147387009U,
    2147387003U, 2147386987U, 2147386921U, 2147386883U, 2147386853U, 2147386757U, 2147386753U, 2147386733U,
    2147386729U, 2147386727U, 2147386711U, 2147386699U, 2147386687U, 2147386667U, 2147386639U, 2147386627U,
    2147386607U, 2147386601U, 2147386583U, 2147386561U, 2147386529U, 2147386471U, 2147386463U, 2147386459U,
    2147386447U, 2147386387U, 2147386303U, 2147386277U, 2147386273U, 2147386271U, 2147386259U, 2147386217U,
    2147386211U, 2147386207U, 2147386187U, 2147386169U, 2147386147U, 2147386123U, 2147386117U, 2147386091U,
    2147386051U, 2147386049U, 2147385973U, 2147385967U, 2147385941U, 2147385937U, 2147385931U, 2147385907U,
    2147385893U, 2147385887U, 2147385857U, 2147385847U, 2147385829U, 2147385827U, 2147385809U, 2147385781U,
    2147385769U, 2147385767U, 2147385763U, 2147385733U, 2147385727U, 2147385697U, 2147385677U, 2147385671U,
    2147385659U, 2147385637U, 2147385631U, 2147385607U, 2147385601U, 2147385599U, 2147385589U, 2147385587U,
    2147385553U, 2147385479U, 2147385473U, 2147385439U, 2147385431U, 2147385389U, 2147385371U, 2147385367U,
    2147385337U, 2147385329U, 2147385313U, 2147385293U, 2147385281U, 2147385223U, 2147385211U, 2147385199U,
    2147385197U, 2147385157U, 2147385151U, 2147385113U, 2147385103U, 2147385091U, 2147385089U, 2147385077U,
    2147385049U, 2147385001U, 2147384977U, 2147384917U, 2147384909U, 2147384893U, 2147384861U, 2147384843U,
    2147384839U, 2147384821U, 2147384797U, 2147384753U, 2147384747U, 2147384737U, 2147384711U, 2147384689U,
    2147384683U, 2147384669U, 2147384653U, 2147384633U, 2147384621U, 2147384609U, 2147384599U, 2147384593U,
    2147384537U, 2147384527U, 2147384509U, 2147384501U, 2147384497U, 2147384413U, 2147384387U, 2147384333U,
    2147384329U, 2147384287U, 2147384263U, 2147384251U, 2147384243U, 2147384227U, 2147384221U, 2147384203U,
    2147384201U, 2147384191U, 2147384111U, 2147384089U, 2147384027U, 2147384023U, 2147384021U, 2147384017U,
    2147384011U, 2147384003U, 2147383999U, 2147383993U, 2147383991U, 2147383957U, 2147383943U, 2147383939U,
    2147383873U, 2147383871U, 2147383867U, 2147383831U, 2147383829U, 2147383807U, 2147383789U, 2147383787U,
    2147383783U, 2147383741U, 2147383739U, 2147383729U, 2147383709U, 2147383697U, 2147383681U, 2147383649U,
    2147383633U, 2147383627U, 2147383573U, 2147383531U, 2147383519U, 2147383507U, 2147383501U, 2147383489U,
    2147383481U, 2147383463U, 2147383421U, 2147383379U, 2147383369U, 2147383349U, 2147383327U, 2147383307U,
    2147383291U, 2147383283U, 2147383267U, 2147383223U, 2147383193U, 2147383177U, 2147383129U, 2147383123U,
    2147383093U, 2147383079U, 2147383019U, 2147383009U, 2147383003U, 2147382997U, 2147382973U, 2147382901U,
    2147382899U, 2147382883U, 2147382877U, 2147382871U, 2147382851U, 2147382847U, 2147382827U, 2147382791U,
    2147382773U, 2147382767U, 2147382751U, 2147382707U, 2147382697U, 2147382683U, 2147382647U, 2147382637U,
    2147382623U, 2147382607U, 2147382599U, 2147382583U, 2147382581U, 2147382551U, 2147382539U, 2147382509U,
    2147382469U, 2147382449U, 2147382443U, 2147382439U, 2147382407U, 2147382403U, 2147382383U, 2147382379U,
    2147382323U, 2147382301U, 2147382287U, 2147382277U, 2147382253U, 2147382239U, 2147382233U, 2147382221U,
    2147382199U, 2147382197U, 2147382179U, 2147382173U, 2147382137U, 2147382043U, 2147381989U, 2147381953U,
    2147381927U, 2147381909U, 2147381903U, 2147381897U, 2147381869U, 2147381857U, 2147381851U, 2147381791U,
    2147381783U, 2147381701U, 2147381693U, 2147381689U, 2147381669U, 2147381633U, 2147381629U, 2147381627U,
    2147381573U, 2147381567U, 2147381527U, 2147381413U, 2147381371U, 2147381363U, 2147381351U, 2147381347U,
    2147381323U, 2147381317U, 2147381309U, 2147381279U, 2147381267U, 2147381263U, 2147381251U, 2147381237U,
    2147381227U, 2147381221U, 2147381219U, 2147381207U, 2147381153U, 2147381147U, 2147381123U, 2147381113U,
    2147381107U, 2147381059U, 2147381029U, 2147381017U, 2147380957U, 2147380919U, 2147380909U, 2147380903U,
    2147380883U, 2147380867U, 2147380853U, 2147380849U, 2147380841U, 2147380831U, 2147380811U, 2147380801U,
    2147380799U, 2147380787U, 2147380783U, 2147380733U, 2147380727U, 2147380693U, 2147380681U, 2147380673U,
    2147380663U, 2147380649U, 2147380639U, 2147380583U, 2147380577U, 2147380553U, 2147380537U, 2147380523U,
    2147380451U, 2147380421U, 2147380387U, 2147380379U, 2147380373U, 2147380369U, 2147380357U, 2147380331U,
    2147380309U, 2147380273U, 2147380243U, 2147380219U, 2147380189U, 2147380159U, 2147380141U, 2147380129U,
    2147380099U, 2147380051U, 2147380033U, 2147379979U, 2147379977U, 2147379937U, 2147379929U, 2147379919U,
    2147379917U, 2147379869U, 2147379863U, 2147379859U, 2147379847U, 2147379823U, 2147379811U, 2147379809U,
    2147379799U, 2147379763U, 2147379761U, 2147379739U, 2147379721U, 2147379673U, 2147379671U, 2147379631U,
    2147379571U, 2147379557U, 2147379541U, 2147379539U, 2147379529U, 2147379503U, 2147379499U, 2147379491U,
    2147379473U, 2147379431U, 2147379419U, 2147379359U, 2147379319U, 2147379301U, 2147379197U, 2147379133U,
    2147379109U, 2147379097U, 2147379077U, 2147378999U, 2147378983U, 2147378971U, 2147378941U, 2147378903U,
    2147378887U, 2147378873U, 2147378843U, 2147378839U, 2147378837U, 2147378833U, 2147378819U, 2147378777U,
    2147378767U, 2147378759U, 2147378729U, 2147378713U, 2147378671U, 2147378557U, 2147378539U, 2147378533U,
    2147378521U, 2147378501U, 2147378479U, 2147378447U, 2147378411U, 2147378393U, 2147378381U, 2147378377U,
    2147378353U, 2147378297U, 2147378269U, 2147378267U, 2147378257U, 2147378251U, 2147378227U, 2147378201U,
    2147378131U, 2147378099U, 2147378063U, 2147378011U, 2147377987U, 2147377961U, 2147377951U, 2147377943U,
    2147377927U, 2147377879U, 2147377871U, 2147377789U, 2147377787U, 2147377753U, 2147377741U, 2147377699U,
    2147377697U, 2147377691U, 2147377679U, 2147377667U, 2147377633U, 2147377607U, 2147377601U, 2147377591U,
    2147377567U, 2147377541U, 2147377523U, 2147377489U, 2147377487U, 2147377481U, 2147377469U, 2147377459U,
    2147377429U, 2147377381U, 2147377343U, 2147377277U, 2147377273U, 2147377247U, 2147377241U, 2147377231U,
    2147377213U, 2147377189U, 2147377153U, 2147377019U, 2147377003U, 2147376989U, 2147376983U, 2147376953U,
    2147376929U, 2147376919U, 2147376893U, 2147376887U, 2147376883U, 2147376823U, 2147376817U, 2147376719U,
    2147376691U, 2147376631U, 2147376617U, 2147376557U, 2147376551U, 2147376547U, 2147376529U, 2147376509U,
    2147376503U, 2147376487U, 2147376463U, 2147376457U, 2147376433U, 2147376419U, 2147376401U, 2147376391U,
    2147376379U, 2147376377U, 2147376367U, 2147376323U, 2147376241U, 2147376193U, 2147376151U, 2147376149U,
    2147376113U, 2147376089U, 2147376073U, 2147376061U, 2147376059U, 2147376053U, 2147376017U, 2147376001U,
    2147375999U, 2147375987U, 2147375969U, 2147375939U, 2147375899U, 2147375869U, 2147375849U, 2147375807U,
    2147375773U, 2147375761U, 2147375729U, 2147375693U, 2147375683U, 2147375677U, 2147375669U, 2147375641U,
    2147375627U, 2147375597U, 2147375591U, 2147375569U, 2147375567U, 2147375561U, 2147375539U, 2147375521U,
    2147375509U, 2147375471U, 2147375437U, 2147375429U, 2147375413U, 2147375411U, 2147375407U, 2147375389U,
    2147375371U, 2147375297U, 2147375291U, 2147375257U, 2147375249U, 2147375207U, 2147375201U, 2147375173U,
    2147375171U, 2147375161U, 2147375149U, 2147375141U, 2147375137U, 2147375119U, 2147375099U, 2147375089U,
    2147375051U, 2147374997U, 2147374993U, 2147374987U, 2147374969U, 2147374951U, 2147374897U, 2147374847U,
    2147374841U, 2147374819U, 2147374787U, 2147374741U, 2147374727U, 2147374711U, 2147374673U, 2147374639U,
    2147374633U, 2147374597U, 2147374577U, 2147374531U, 2147374519U, 2147374477U, 2147374459U, 2147374337U,
    2147374331U, 2147374301U, 2147374297U, 2147374283U, 2147374279U, 2147374253U, 2147374241U, 2147374183U,
    2147374169U, 2147374133U, 2147374127U, 2147374121U, 2147374109U, 2147374087U, 2147374051U, 2147374043U,
    2147374013U, 2147373997U, 2147373983U, 2147373979U, 2147373967U, 2147373961U, 2147373953U, 2147373931U,
    2147373923U, 2147373883U, 2147373803U, 2147373791U, 2147373713U, 2147373707U, 2147373703U, 2147373677U,
    2147373661U, 2147373659U, 2147373607U, 2147373589U, 2147373583U, 2147373539U, 2147373511U, 2147373491U,
    2147373467U, 2147373461U, 2147373457U, 2147373451U, 2147373443U, 2147373439U, 2147373433U, 2147373419U,
    2147373409U, 2147373359U, 2147373337U, 2147373313U, 2147373289U, 2147373257U, 2147373253U, 2147373227U,
    2147373223U, 2147373211U, 2147373197U, 2147373191U, 2147373169U, 2147373167U, 2147373161U, 2147373157U,
    2147373143U, 2147373133U, 2147373119U, 2147373097U, 2147373077U, 2147373047U, 2147373029U, 2147372987U,
    2147372977U, 2147372957U, 2147372939U, 2147372933U, 2147372917U, 2147372881U, 2147372863U, 2147372849U,
    2147372819U, 2147372797U, 2147372789U, 2147372783U, 2147372779U, 2147372771U, 2147372753U, 2147372749U,
    2147372729U, 2147372701U, 2147372659U, 2147372641U, 2147372639U, 2147372627U, 2147372551U, 2147372543U,
    2147372489U, 2147372467U, 2147372411U, 2147372377U, 2147372333U, 2147372329U, 2147372321U, 2147372273U,
    2147372257U, 2147372231U, 2147372189U, 2147372179U, 2147372173U, 2147372167U, 2147372147U, 2147372131U,
    2147372111U, 2147372011U, 2147371999U, 2147371991U, 2147371973U, 2147371951U, 2147371927U, 2147371907U,
    2147371901U, 2147371841U, 2147371799U, 2147371769U, 2147371763U, 2147371757U, 2147371727U, 2147371703U,
    2147371661U, 2147371637U, 2147371549U, 2147371537U, 2147371487U, 2147371483U, 2147371481U, 2147371459U,
    2147371417U, 2147371411U, 2147371361U, 2147371339U, 2147371321U, 2147371319U, 2147371309U, 2147371307U,
    2147371301U, 2147371253U, 2147371231U, 2147371199U, 2147371189U, 2147371181U, 2147371129U, 2147371097U,
    2147371087U, 2147371081U, 2147371069U, 2147371049U, 2147371019U, 2147370989U, 2147370947U, 2147370893U,
    2147370877U, 2147370871U, 2147370857U, 2147370853U, 2147370839U, 2147370821U, 2147370791U, 2147370773U,
    2147370761U, 2147370707U, 2147370683U, 2147370661U, 2147370629U, 2147370607U, 2147370601U, 2147370587U,
    2147370583U, 2147370581U, 2147370553U, 2147370539U, 2147370529U, 2147370509U, 2147370503U, 2147370499U,
    2147370497U, 2147370473U, 2147370461U, 2147370437U, 2147370427U, 2147370389U, 2147370377U, 2147370371U,
    2147370359U, 2147370353U, 2147370343U, 2147370311U, 2147370299U, 2147370293U, 2147370271U, 2147370233U,
    2147370193U, 2147370187U, 2147370161U, 2147370157U, 2147370149U, 2147370143U, 2147370109U, 2147370103U,
    2147370089U, 2147370041U, 2147370023U, 2147370013U, 2147369963U, 2147369929U, 2147369927U, 2147369897U,
    2147369879U, 2147369867U, 2147369827U, 2147369813U, 2147369789U, 2147369779U, 2147369771U, 2147369761U,
    2147369753U, 2147369747U, 2147369713U, 2147369689U, 2147369687U, 2147369681U, 2147369633U, 2147369621U,
    2147369617U, 2147369611U, 2147369599U, 2147369573U, 2147369563U, 2147369551U, 2147369537U, 2147369513U,
    2147369509U, 2147369491U, 2147369449U, 2147369347U, 2147369327U, 2147369317U, 2147369291U, 2147369281U,
    2147369249U, 2147369239U, 2147369209U, 2147369183U, 2147369167U, 2147369143U, 2147369141U, 2147369117U,
    2147369089U, 2147369071U, 2147369069U, 2147369057U, 2147369053U, 2147369051U, 2147369047U, 2147369027U,
    2147369023U, 2147368981U, 2147368969U, 2147368967U, 2147368921U, 2147368919U, 2147368907U, 2147368871U,
    2147368837U, 2147368799U, 2147368763U, 2147368687U, 2147368679U, 2147368669U, 2147368649U, 2147368631U,
    2147368621U, 2147368607U, 2147368591U, 2147368523U, 2147368507U, 2147368501U, 2147368459U, 2147368439U,
    2147368427U, 2147368417U, 2147368409U, 2147368397U, 2147368361U, 2147368351U, 2147368337U, 2147368319U,
    2147368261U, 2147368247U, 2147368229U, 2147368217U, 2147368199U, 2147368187U, 2147368169U, 2147368147U,
    2147368129U, 2147368117U, 2147368057U, 2147368051U, 2147368009U, 2147367983U, 2147367961U, 2147367947U,
    2147367941U, 2147367931U, 2147367919U, 2147367899U, 2147367823U, 2147367773U, 2147367757U, 2147367751U,
    2147367713U, 2147367697U, 2147367577U, 2147367569U, 2147367559U, 2147367539U, 2147367533U, 2147367503U,
    2147367491U, 2147367419U, 2147367401U, 2147367373U, 2147367361U, 2147367337U, 2147367319U, 2147367311U,
    2147367293U, 2147367259U, 2147367247U, 2147367227U, 2147367217U, 2147367203U, 2147367191U, 2147367163U,
    2147367149U, 2147367139U, 2147367083U, 2147367077U, 2147367073U, 2147367071U, 2147366999U, 2147366983U,
    2147366971U, 2147366933U, 2147366929U, 2147366899U, 2147366887U, 2147366839U, 2147366831U, 2147366797U,
    2147366791U, 2147366777U, 2147366737U, 2147366729U, 2147366717U, 2147366701U, 2147366699U, 2147366653U,
    2147366651U, 2147366647U, 2147366609U, 2147366579U, 2147366569U, 2147366561U, 2147366539U, 2147366531U,
    2147366437U, 2147366399U, 2147366371U, 2147366369U, 2147366323U, 2147366303U, 2147366261U, 2147366189U,
    2147366171U, 2147366159U, 2147366129U, 2147366113U, 2147366093U, 2147366083U, 2147366069U, 2147366059U,
    2147366051U, 2147366047U, 2147366041U, 2147365991U, 2147365943U, 2147365919U, 2147365907U, 2147365901U,
    2147365889U, 2147365841U, 2147365837U, 2147365783U, 2147365763U, 2147365741U, 2147365739U, 2147365723U,
    2147365709U, 2147365699U, 2147365681U, 2147365667U, 2147365663U, 2147365643U, 2147365631U, 2147365607U,
    2147365603U, 2147365573U, 2147365511U, 2147365453U, 2147365397U, 2147365391U, 2147365373U, 2147365369U,
    2147365361U, 2147365333U, 2147365301U, 2147365277U, 2147365273U, 2147365271U, 2147365267U, 2147365243U,
    2147365219U, 2147365177U, 2147365159U, 2147365151U, 2147365147U, 2147365079U, 2147365067U, 2147365061U,
    2147365057U, 2147365043U, 2147365039U, 2147365027U, 2147365019U, 2147364997U, 2147364959U, 2147364953U,
    2147364949U, 2147364937U, 2147364887U, 2147364881U, 2147364871U, 2147364851U, 2147364841U, 2147364833U,
    2147364829U, 2147364803U, 2147364799U, 2147364797U, 2147364773U, 2147364763U, 2147364733U, 2147364731U,
    2147364719U, 2147364701U, 2147364697U, 2147364643U, 2147364631U, 2147364613U, 2147364601U, 2147364587U,
    2147364559U, 2147364551U, 2147364547U, 2147364533U, 2147364493U, 2147364481U, 2147364473U, 2147364467U,
    2147364437U, 2147364397U, 2147364391U, 2147364379U, 2147364353U, 2147364319U, 2147364311U, 2147364293U,
    2147364283U, 2147364281U, 2147364269U, 2147364239U, 2147364221U, 2147364209U, 2147364179U, 2147364169U,
    2147364161U, 2147364113U, 2147364103U, 2147364101U, 2147364083U, 2147364077U, 2147364071U, 2147364049U,
    2147364041U, 2147364031U, 2147364007U, 2147363963U, 2147363951U, 2147363947U, 2147363887U, 2147363873U,
    2147363861U, 2147363851U, 2147363849U, 2147363843U, 2147363837U, 2147363833U, 2147363821U, 2147363809U,
    2147363761U, 2147363753U, 2147363749U, 2147363737U, 2147363681U, 2147363657U, 2147363623U, 2147363597U,
    2147363573U, 2147363567U, 2147363549U, 2147363507U, 2147363501U, 2147363497U, 2147363453U, 2147363447U,
    2147363363U, 2147363359U, 2147363357U, 2147363327U, 2147363303U, 2147363249U, 2147363209U, 2147363201U,
    2147363173U, 2147363171U, 2147363161U, 2147363159U, 2147363131U, 2147363123U, 2147363093U, 2147363083U,
    2147363077U, 2147363063U, 2147363039U, 2147363027U, 2147363021U, 2147362949U, 2147362933U, 2147362927U,
    2147362909U, 2147362807U, 2147362801U, 2147362799U, 2147362781U, 2147362771U, 2147362759U, 2147362751U,
    2147362733U, 2147362727U, 2147362699U, 2147362697U, 2147362661U, 2147362631U, 2147362589U, 2147362561U,
    2147362559U, 2147362543U, 2147362519U, 2147362513U, 2147362499U, 2147362493U, 2147362487U, 2147362453U,
    2147362439U, 2147362417U, 2147362397U, 2147362381U, 2147362369U, 2147362351U, 2147362309U, 2147362291U,
    2147362267U, 2147362253U, 2147362247U, 2147362237U, 2147362193U, 2147362177U, 2147362153U, 2147362093U,
    2147362073U, 2147362069U, 2147362057U, 2147362027U, 2147362013U, 2147362001U, 2147361967U, 2147361947U,
    2147361917U, 2147361901U, 2147361889U, 2147361883U, 2147361877U, 2147361871U, 2147361823U, 2147361793U,
    2147361791U, 2147361787U, 2147361763U, 2147361721U, 2147361683U, 2147361679U, 2147361677U, 2147361659U,
    2147361631U, 2147361617U, 2147361611U, 2147361583U, 2147361577U, 2147361571U, 2147361529U, 2147361527U,
    2147361509U, 2147361499U, 2147361497U, 2147361479U, 2147361451U, 2147361449U, 2147361421U, 2147361401U,
    2147361379U, 2147361371U, 2147361343U, 2147361299U, 2147361287U, 2147361277U, 2147361263U, 2147361257U,
    2147361253U, 2147361241U, 2147361221U, 2147361217U, 2147361191U, 2147361163U, 2147361157U, 2147361107U,
    2147361089U, 2147361067U, 2147361061U, 2147361017U, 2147361011U, 2147360993U, 2147360953U, 2147360947U,
    2147360903U, 2147360869U, 2147360833U, 2147360827U, 2147360819U, 2147360807U, 2147360783U, 2147360779U,
    2147360771U, 2147360759U, 2147360741U, 2147360737U, 2147360717U, 2147360711U, 2147360687U, 2147360681U,
    2147360671U, 2147360641U, 2147360629U, 2147360603U, 2147360587U, 2147360539U, 2147360503U, 2147360497U,
    2147360473U, 2147360447U, 2147360443U, 2147360441U, 2147360429U, 2147360417U, 2147360381U, 2147360351U,
    2147360329U, 2147360311U, 2147360309U, 2147360291U, 2147360263U, 2147360261U, 2147360233U, 2147360197U,
    2147360191U, 2147360179U, 2147360177U, 2147360161U, 2147360153U, 2147360141U, 2147360119U, 2147360087U,
    2147360077U, 2147360029U, 2147360023U, 2147359979U, 2147359967U, 2147359943U, 2147359931U, 2147359919U,
    2147359891U, 2147359873U, 2147359831U, 2147359813U, 2147359771U, 2147359769U, 2147359733U, 2147359681U,
    2147359673U, 2147359661U, 2147359631U, 2147359609U, 2147359601U, 2147359597U, 2147359579U, 2147359517U,
    2147359477U, 2147359469U, 2147359463U, 2147359441U, 2147359439U, 2147359427U, 2147359421U, 2147359399U,
    2147359397U, 2147359351U, 2147359321U, 2147359273U, 2147359231U, 2147359223U, 2147359219U, 2147359217U,
    2147359163U, 2147359087U, 2147359073U, 2147359037U, 2147359033U, 2147358991U, 2147358977U, 2147358953U,
    2147358919U, 2147358907U, 2147358881U, 2147358869U, 2147358847U, 2147358833U, 2147358827U, 2147358797U,
    2147358793U, 2147358781U, 2147358767U, 2147358721U, 2147358673U, 2147358671U, 2147358649U, 2147358593U,
    2147358589U, 2147358581U, 2147358541U, 2147358527U, 2147358469U, 2147358457U, 2147358449U, 2147358439U,
    2147358427U, 2147358401U, 2147358391U, 2147358379U, 2147358373U, 2147358347U, 2147358263U, 2147358259U,
    2147358221U, 2147358217U, 2147358193U, 2147358167U, 2147358163U, 2147358121U, 2147358113U, 2147358079U,
    2147358049U, 2147358023U, 2147358019U, 2147358001U, 2147357969U, 2147357921U, 2147357909U, 2147357851U,
    2147357843U, 2147357791U, 2147357759U, 2147357743U, 2147357741U, 2147357701U, 2147357677U, 2147357629U,
    2147357623U, 2147357621U, 2147357617U, 2147357603U, 2147357587U, 2147357549U, 2147357501U, 2147357489U,
    2147357473U, 2147357467U, 2147357453U, 2147357417U, 2147357413U, 2147357389U, 2147357357U, 2147357351U,
    2147357323U, 2147357279U, 2147357239U, 2147357203U, 2147357189U, 2147357183U, 2147357153U, 2147357141U,
    2147357131U, 2147357129U, 2147357111U, 2147357101U, 2147357099U, 2147357089U, 2147357071U, 2147357059U,
    2147357053U, 2147357041U, 2147357039U, 2147357033U, 2147356973U, 2147356963U, 2147356951U, 2147356909U,
    2147356891U, 2147356867U, 2147356829U, 2147356817U, 2147356807U, 2147356787U, 2147356703U, 2147356691U,
    2147356597U, 2147356583U, 2147356553U, 2147356517U, 2147356511U, 2147356501U, 2147356493U, 2147356451U,
    2147356439U, 2147356399U, 2147356397U, 2147356381U, 2147356361U, 2147356349U, 2147356333U, 2147356331U,
    2147356327U, 2147356283U, 2147356261U, 2147356201U, 2147356147U, 2147356111U, 2147356103U, 2147356093U,
    2147356091U, 2147356067U, 2147356009U, 2147356007U, 2147355989U, 2147355949U, 2147355943U, 2147355941U,
    2147355937U, 2147355919U, 2147355913U, 2147355911U, 2147355871U, 2147355863U, 2147355841U, 2147355761U,
    2147355757U, 2147355701U, 2147355677U, 2147355649U, 2147355641U, 2147355619U, 2147355559U, 2147355557U,
    2147355541U, 2147355487U, 2147355479U, 2147355467U, 2147355439U, 2147355409U, 2147355383U, 2147355341U,
    2147355277U, 2147355247U, 2147355241U, 2147355193U, 2147355191U, 2147355181U, 2147355173U, 2147355149U,
    2147355137U, 2147355131U, 2147355107U, 2147355103U, 2147355047U, 2147355043U, 2147354987U, 2147354969U,
    2147354953U, 2147354947U, 2147354921U, 2147354899U, 2147354897U, 2147354893U, 2147354873U, 2147354849U,
    2147354789U, 2147354777U, 2147354767U, 2147354747U, 2147354723U, 2147354719U, 2147354689U, 2147354647U,
    2147354633U, 2147354617U, 2147354611U, 2147354603U, 2147354591U, 2147354581U, 2147354579U, 2147354567U,
    2147354549U, 2147354527U, 2147354509U, 2147354467U, 2147354453U, 2147354437U, 2147354411U, 2147354399U,
    2147354393U, 2147354357U, 2147354309U, 2147354291U, 2147354257U, 2147354243U, 2147354191U, 2147354161U,
    2147354119U, 2147354117U, 2147354113U, 2147354107U, 2147354051U, 2147354047U, 2147354021U, 2147354017U,
    2147354009U, 2147353993U, 2147353979U, 2147353961U, 2147353933U, 2147353919U, 2147353889U, 2147353847U,
    2147353843U, 2147353801U, 2147353783U, 2147353729U, 2147353727U, 2147353697U, 2147353693U, 2147353667U,
    2147353643U, 2147353603U, 2147353597U, 2147353573U, 2147353567U, 2147353561U, 2147353543U, 2147353513U,
    2147353499U, 2147353469U, 2147353427U, 2147353399U, 2147353367U, 2147353337U, 2147353259U, 2147353253U,
    2147353237U, 2147353189U, 2147353157U, 2147353151U, 2147353123U, 2147353097U, 2147353069U, 2147353063U,
    2147353057U, 2147353051U, 2147353003U, 2147352989U, 2147352973U, 2147352959U, 2147352953U, 2147352947U,
    2147352913U, 2147352869U, 2147352847U, 2147352833U, 2147352817U, 2147352803U, 2147352797U, 2147352787U,
    2147352679U, 2147352661U, 2147352653U, 2147352643U, 2147352631U, 2147352629U, 2147352607U, 2147352587U,
    2147352577U, 2147352563U, 2147352551U, 2147352539U, 2147352523U, 2147352521U, 2147352503U, 2147352499U,
    2147352413U, 2147352407U, 2147352401U, 2147352379U, 2147352373U, 2147352371U, 2147352353U, 2147352349U,
    2147352307U, 2147352283U, 2147352209U, 2147352191U, 2147352173U, 2147352169U, 2147352149U, 2147352107U,
    2147352083U, 2147352079U, 2147352061U, 2147352029U, 2147351939U, 2147351909U, 2147351891U, 2147351879U,
    2147351831U, 2147351827U, 2147351819U, 2147351813U, 2147351797U, 2147351779U, 2147351743U, 2147351699U,
    2147351677U, 2147351663U, 2147351641U, 2147351639U, 2147351629U, 2147351623U, 2147351593U, 2147351581U,
    2147351567U, 2147351539U, 2147351537U, 2147351527U, 2147351497U, 2147351491U, 2147351449U, 2147351441U,
    2147351419U, 2147351399U, 2147351387U, 2147351383U, 2147351363U, 2147351347U, 2147351333U, 2147351321U,
    2147351309U, 2147351299U, 2147351293U, 2147351287U, 2147351267U, 2147351263U, 2147351257U, 2147351237U,
    2147351207U, 2147351189U, 2147351161U, 2147351159U, 2147351147U, 2147351119U, 2147351099U, 2147351077U,
    2147351069U, 2147351057U, 2147351053U, 2147351033U, 2147350967U, 2147350957U, 2147350943U, 2147350921U,
    2147350883U, 2147350867U, 2147350859U, 2147350847U, 2147350831U, 2147350823U, 2147350819U, 2147350787U,
    2147350783U, 2147350757U, 2147350747U, 2147350739U, 2147350697U, 2147350691U, 2147350669U, 2147350663U,
    2147350661U, 2147350657U, 2147350651U, 2147350649U, 2147350627U, 2147350619U, 2147350573U, 2147350571U,
    2147350549U, 2147350511U, 2147350481U, 2147350459U, 2147350411U, 2147350399U, 2147350363U, 2147350351U,
    2147350349U, 2147350339U, 2147350333U, 2147350319U, 2147350307U, 2147350267U, 2147350171U, 2147350169U,
    2147350159U, 2147350157U, 2147350111U, 2147350103U, 2147350099U, 2147350069U, 2147350061U, 2147350003U,
    2147350001U, 2147349977U, 2147349907U, 2147349889U, 2147349887U, 2147349833U, 2147349829U, 2147349821U,
    2147349817U, 2147349811U, 2147349793U, 2147349769U, 2147349761U, 2147349751U, 2147349739U, 2147349731U,
    2147349727U, 2147349697U, 2147349683U, 2147349647U, 2147349641U, 2147349637U, 2147349601U, 2147349569U,
    2147349559U, 2147349557U, 2147349553U, 2147349551U, 2147349521U, 2147349517U, 2147349497U, 2147349493U,
    2147349487U, 2147349461U, 2147349443U, 2147349439U, 2147349433U, 2147349383U, 2147349311U, 2147349307U,
    2147349257U, 2147349247U, 2147349227U, 2147349221U, 2147349181U, 2147349143U, 2147349119U, 2147349107U,
    2147349103U, 2147349079U, 2147349059U, 2147349041U, 2147349031U, 2147348989U, 2147348971U, 2147348969U,
    2147348953U, 2147348939U, 2147348933U, 2147348927U, 2147348887U, 2147348881U, 2147348873U, 2147348809U,
    2147348789U, 2147348743U, 2147348741U, 2147348713U, 2147348711U, 2147348699U, 2147348683U, 2147348681U,
    2147348627U, 2147348617U, 2147348573U, 2147348551U, 2147348537U, 2147348521U, 2147348513U, 2147348453U,
    2147348443U, 2147348419U, 2147348417U, 2147348389U, 2147348377U, 2147348369U, 2147348339U, 2147348321U,
    2147348293U, 2147348279U, 2147348263U, 2147348257U, 2147348237U, 2147348221U, 2147348209U, 2147348179U,
    2147348143U, 2147348113U, 2147348111U, 2147348101U, 2147348039U, 2147348009U, 2147348003U, 2147347999U,
    2147347967U, 2147347963U, 2147347933U, 2147347883U, 2147347861U, 2147347831U, 2147347793U, 2147347777U,
    2147347771U, 2147347759U, 2147347753U, 2147347739U, 2147347729U, 2147347693U, 2147347691U, 2147347687U,
    2147347679U, 2147347661U, 2147347613U, 2147347607U, 2147347547U, 2147347451U, 2147347441U, 2147347409U,
    2147347403U, 2147347379U, 2147347351U, 2147347337U, 2147347331U, 2147347283U, 2147347261U, 2147347259U,
    2147347177U, 2147347159U, 2147347121U, 2147347109U, 2147347051U, 2147347043U, 2147347009U, 2147347003U,
    2147347001U, 2147346983U, 2147346923U, 2147346919U, 2147346893U, 2147346889U, 2147346863U, 2147346821U,
    2147346811U, 2147346809U, 2147346793U, 2147346779U, 2147346767U, 2147346709U, 2147346703U, 2147346697U,
    2147346667U, 2147346659U, 2147346613U, 2147346589U, 2147346581U, 2147346527U, 2147346497U, 2147346473U,
    2147346469U, 2147346457U, 2147346437U, 2147346433U, 2147346431U, 2147346419U, 2147346361U, 2147346349U,
    2147346329U, 2147346323U, 2147346317U, 2147346269U, 2147346247U, 2147346233U, 2147346221U, 2147346167U,
    2147346077U, 2147346073U, 2147346059U, 2147346049U, 2147345969U, 2147345947U, 2147345927U, 2147345923U,
    2147345899U, 2147345897U, 2147345873U, 2147345869U, 2147345867U, 2147345821U, 2147345813U, 2147345807U,
    2147345791U, 2147345773U, 2147345747U, 2147345723U, 2147345699U, 2147345693U, 2147345647U, 2147345639U,
    2147345623U, 2147345621U, 2147345617U, 2147345561U, 2147345549U, 2147345489U, 2147345471U, 2147345467U,
    2147345461U, 2147345449U, 2147345437U, 2147345423U, 2147345407U, 2147345393U, 2147345383U, 2147345359U,
    2147345341U, 2147345311U, 2147345269U, 2147345227U, 2147345201U, 2147345197U, 2147345183U, 2147345129U,
    2147345099U, 2147345093U, 2147345077U, 2147345063U, 2147345047U, 2147345023U, 2147344993U, 2147344981U,
    2147344967U, 2147344897U, 2147344889U, 2147344867U, 2147344847U, 2147344819U, 2147344811U, 2147344781U,
    2147344777U, 2147344747U, 2147344733U, 2147344711U, 2147344657U, 2147344649U, 2147344637U, 2147344541U,
    2147344457U, 2147344429U, 2147344427U, 2147344403U, 2147344399U, 2147344393U, 2147344357U, 2147344351U,
    2147344333U, 2147344327U, 2147344253U, 2147344219U, 2147344217U, 2147344201U, 2147344189U, 2147344187U,
    2147344181U, 2147344163U, 2147344097U, 2147344091U, 2147344081U, 2147344079U, 2147344057U, 2147344039U,
    2147344027U, 2147344007U, 2147343997U, 2147343941U, 2147343937U, 2147343923U, 2147343893U, 2147343857U,
    2147343853U, 2147343827U, 2147343823U, 2147343817U, 2147343787U, 2147343749U, 2147343739U, 2147343703U,
    2147343697U, 2147343689U, 2147343647U, 2147343631U, 2147343623U, 2147343613U, 2147343571U, 2147343521U,
    2147343511U, 2147343509U, 2147343461U, 2147343439U, 2147343431U, 2147343421U, 2147343397U, 2147343391U,
    2147343347U, 2147343329U, 2147343313U, 2147343301U, 2147343299U, 2147343269U, 2147343259U, 2147343257U,
    2147343239U, 2147343221U, 2147343217U, 2147343203U, 2147343199U, 2147343169U, 2147343113U, 2147343103U,
    2147343059U, 2147343041U, 2147343013U, 2147343001U, 2147342959U, 2147342941U, 2147342887U, 2147342881U,
    2147342863U, 2147342861U, 2147342839U, 2147342833U, 2147342807U, 2147342759U, 2147342731U, 2147342711U,
    2147342707U, 2147342677U, 2147342657U, 2147342653U, 2147342623U, 2147342591U, 2147342579U, 2147342479U,
    2147342413U, 2147342411U, 2147342383U, 2147342341U, 2147342339U, 2147342297U, 2147342273U, 2147342269U,
    2147342243U, 2147342237U, 2147342227U, 2147342179U, 2147342167U, 2147342089U, 2147342047U, 2147342039U,
    2147342009U, 2147341997U, 2147341907U, 2147341901U, 2147341891U, 2147341849U, 2147341811U, 2147341789U,
    2147341771U, 2147341751U, 2147341717U, 2147341649U, 2147341643U, 2147341613U, 2147341607U, 2147341579U,
    2147341577U, 2147341541U, 2147341531U, 2147341523U, 2147341517U, 2147341463U, 2147341447U, 2147341429U,
    2147341409U, 2147341397U, 2147341393U, 2147341381U, 2147341379U, 2147341369U, 2147341333U, 2147341327U,
    2147341321U, 2147341319U, 2147341307U, 2147341243U, 2147341241U, 2147341177U, 2147341171U, 2147341169U,
    2147341159U, 2147341051U, 2147341039U, 2147341033U, 2147340977U, 2147340959U, 2147340947U, 2147340919U,
    2147340913U, 2147340911U, 2147340889U, 2147340883U, 2147340859U, 2147340851U, 2147340823U, 2147340817U,
    2147340763U, 2147340761U, 2147340749U, 2147340733U, 2147340709U, 2147340707U, 2147340691U, 2147340677U,
    2147340673U, 2147340667U, 2147340661U, 2147340623U, 2147340599U, 2147340589U, 2147340563U, 2147340551U,
    2147340541U, 2147340509U, 2147340491U, 2147340383U, 2147340343U, 2147340337U, 2147340269U, 2147340263U,
    2147340203U, 2147340197U, 2147340161U, 2147340133U, 2147340101U, 2147340077U, 2147340071U, 2147340067U,
    2147340031U, 2147339993U, 2147339981U, 2147339963U, 2147339939U, 2147339933U, 2147339911U, 2147339903U,
    2147339867U, 2147339851U, 2147339839U, 2147339813U, 2147339801U, 2147339783U, 2147339741U, 2147339687U,
    2147339681U, 2147339657U, 2147339627U, 2147339569U, 2147339561U, 2147339531U, 2147339521U, 2147339489U,
    2147339471U, 2147339459U, 2147339449U, 2147339429U, 2147339393U, 2147339353U, 2147339351U, 2147339323U,
    2147339303U, 2147339291U, 2147339251U, 2147339221U, 2147339219U, 2147339209U, 2147339177U, 2147339119U,
    2147339111U, 2147339101U, 2147339039U, 2147339027U, 2147339021U, 2147339011U, 2147338967U, 2147338957U,
    2147338943U, 2147338933U, 2147338883U, 2147338861U, 2147338849U, 2147338819U, 2147338801U, 2147338793U,
    2147338763U, 2147338757U, 2147338709U, 2147338703U, 2147338667U, 2147338657U, 2147338649U, 2147338643U,
    2147338639U, 2147338607U, 2147338577U, 2147338519U, 2147338517U, 2147338463U, 2147338451U, 2147338441U,
    2147338439U, 2147338433U, 2147338423U, 2147338399U, 2147338393U, 2147338309U, 2147338283U, 2147338279U,
    2147338261U, 2147338241U, 2147338231U, 2147338199U, 2147338139U, 2147338117U, 2147338103U, 2147338097U,
    2147338093U, 2147338091U, 2147338079U, 2147338033U, 2147338009U, 2147338001U, 2147337989U, 2147337967U,
    2147337911U, 2147337901U, 2147337893U, 2147337889U, 2147337887U, 2147337869U, 2147337817U, 2147337811U,
    2147337793U, 2147337743U, 2147337697U, 2147337659U, 2147337653U, 2147337641U, 2147337637U, 2147337623U,
    2147337583U, 2147337581U, 2147337547U, 2147337499U, 2147337487U, 2147337461U, 2147337407U, 2147337389U,
    2147337349U, 2147337343U, 2147337341U, 2147337289U, 2147337287U, 2147337281U, 2147337253U, 2147337229U,
    2147337223U, 2147337187U, 2147337149U, 2147337119U, 2147337091U, 2147337007U, 2147337001U, 2147336969U,
    2147336953U, 2147336903U, 2147336899U, 2147336857U, 2147336837U, 2147336797U, 2147336777U, 2147336753U,
    2147336743U, 2147336729U, 2147336717U, 2147336713U, 2147336689U, 2147336651U, 2147336641U, 2147336629U,
    2147336599U, 2147336591U, 2147336563U, 2147336561U, 2147336497U, 2147336491U, 2147336483U, 2147336467U,
    2147336459U, 2147336441U, 2147336413U, 2147336383U, 2147336381U, 2147336371U, 2147336311U, 2147336293U,
    2147336273U, 2147336263U, 2147336183U, 2147336171U, 2147336161U, 2147336123U, 2147336111U, 2147336101U,
    2147336071U, 2147336063U, 2147336057U, 2147336039U, 2147336017U, 2147335991U, 2147335987U, 2147335973U,
    2147335951U, 2147335937U, 2147335919U, 2147335903U, 2147335889U, 2147335877U, 2147335831U, 2147335829U,
    2147335823U, 2147335819U, 2147335781U, 2147335777U, 2147335759U, 2147335747U, 2147335733U, 2147335703U,
    2147335693U, 2147335691U, 2147335679U, 2147335669U, 2147335667U, 2147335633U, 2147335607U, 2147335601U,
    2147335571U, 2147335543U, 2147335511U, 2147335507U, 2147335471U, 2147335469U, 2147335459U, 2147335429U,
    2147335423U, 2147335391U, 2147335381U, 2147335349U, 2147335343U, 2147335303U, 2147335291U, 2147335273U,
    2147335243U, 2147335181U, 2147335163U, 2147335153U, 2147335133U, 2147335117U, 2147335087U, 2147335079U,
    2147335067U, 2147335019U, 2147335007U, 2147334979U, 2147334961U, 2147334953U, 2147334887U, 2147334857U,
    2147334797U, 2147334793U, 2147334769U, 2147334767U, 2147334727U, 2147334713U, 2147334613U, 2147334601U,
    2147334599U, 2147334589U, 2147334557U, 2147334547U, 2147334503U, 2147334461U, 2147334401U, 2147334289U,
    2147334283U, 2147334281U, 2147334271U, 2147334269U, 2147334253U, 2147334223U, 2147334221U, 2147334199U,
    2147334187U, 2147334181U, 2147334173U, 2147334169U, 2147334157U, 2147334151U, 2147334113U, 2147334103U,
    2147334097U, 2147334089U, 2147334067U, 2147334023U, 2147333983U, 2147333953U, 2147333939U, 2147333933U,
    2147333921U, 2147333897U, 2147333893U, 2147333891U, 2147333879U, 2147333857U, 2147333827U, 2147333821U,
    2147333789U, 2147333723U, 2147333701U, 2147333693U, 2147333647U, 2147333641U, 2147333611U, 2147333581U,
    2147333561U, 2147333557U, 2147333543U, 2147333537U, 2147333491U, 2147333473U, 2147333453U, 2147333437U,
    2147333423U, 2147333417U, 2147333387U, 2147333381U, 2147333351U, 2147333323U, 2147333197U, 2147333191U,
    2147333161U, 2147333137U, 2147333131U, 2147333129U, 2147333093U, 2147333081U, 2147333077U, 2147333047U,
    2147333009U, 2147333003U, 2147332987U, 2147332981U, 2147332963U, 2147332961U, 2147332949U, 2147332921U,
    2147332909U, 2147332897U, 2147332879U, 2147332843U, 2147332841U, 2147332799U, 2147332787U, 2147332763U,
    2147332751U, 2147332717U, 2147332711U, 2147332697U, 2147332673U, 2147332651U, 2147332639U, 2147332613U,
    2147332609U, 2147332573U, 2147332547U, 2147332541U, 2147332529U, 2147332511U, 2147332501U, 2147332493U,
    2147332487U, 2147332469U, 2147332399U, 2147332391U, 2147332387U, 2147332357U, 2147332349U, 2147332321U,
    2147332261U, 2147332249U, 2147332217U, 2147332181U, 2147332147U, 2147332127U, 2147332123U, 2147332039U,
    2147332027U, 2147332021U, 2147332001U, 2147331983U, 2147331973U, 2147331959U, 2147331947U, 2147331899U,
    2147331877U, 2147331859U, 2147331841U, 2147331833U, 2147331779U, 2147331763U, 2147331749U, 2147331733U,
    2147331731U, 2147331713U, 2147331707U, 2147331679U, 2147331677U, 2147331673U, 2147331649U, 2147331601U,
    2147331587U, 2147331559U, 2147331551U, 2147331541U, 2147331481U, 2147331479U, 2147331437U, 2147331413U,
    2147331409U, 2147331401U, 2147331383U, 2147331349U, 2147331229U, 2147331167U, 2147331163U, 2147331161U,
    2147331143U, 2147331139U, 2147331107U, 2147331079U, 2147331059U, 2147330993U, 2147330963U, 2147330957U,
    2147330953U, 2147330951U, 2147330917U, 2147330903U, 2147330893U, 2147330873U, 2147330863U, 2147330851U,
    2147330821U, 2147330819U, 2147330803U, 2147330791U, 2147330767U, 2147330749U, 2147330737U, 2147330729U,
    2147330711U, 2147330701U, 2147330699U, 2147330651U, 2147330621U, 2147330617U, 2147330587U, 2147330567U,
    2147330533U, 2147330527U, 2147330513U, 2147330509U, 2147330477U, 2147330453U, 2147330447U, 2147330443U,
    2147330441U, 2147330359U, 2147330303U, 2147330293U, 2147330281U, 2147330279U, 2147330221U, 2147330203U,
    2147330161U, 2147330153U, 2147330147U, 2147330111U, 2147330099U, 2147330093U, 2147330089U, 2147330063U,
    2147330051U, 2147330021U, 2147329981U, 2147329949U, 2147329931U, 2147329907U, 2147329901U, 2147329883U,
    2147329867U, 2147329819U, 2147329799U, 2147329781U, 2147329763U, 2147329733U, 2147329729U, 2147329661U,
    2147329651U, 2147329649U, 2147329637U, 2147329633U, 2147329577U, 2147329567U, 2147329553U, 2147329549U,
    2147329543U, 2147329537U, 2147329523U, 2147329507U, 2147329489U, 2147329469U, 2147329453U, 2147329451U,
    2147329439U, 2147329417U, 2147329411U, 2147329409U, 2147329391U, 2147329363U, 2147329357U, 2147329333U,
    2147329309U, 2147329307U, 2147329267U, 2147329187U, 2147329159U, 2147329147U, 2147329139U, 2147329117U,
    2147329097U, 2147329073U, 2147329057U, 2147329031U, 2147329027U, 2147329021U, 2147328991U, 2147328979U,
    2147328961U, 2147328907U, 2147328889U, 2147328881U, 2147328857U, 2147328839U, 2147328823U, 2147328811U,
    2147328787U, 2147328763U, 2147328727U, 2147328709U, 2147328679U, 2147328647U, 2147328641U, 2147328637U,
    2147328611U, 2147328593U, 2147328583U, 2147328563U, 2147328523U, 2147328517U, 2147328511U, 2147328509U,
    2147328503U, 2147328499U, 2147328487U, 2147328451U, 2147328427U, 2147328413U, 2147328409U, 2147328397U,
    2147328389U, 2147328373U, 2147328371U, 2147328347U, 2147328341U, 2147328317U, 2147328307U, 2147328269U,
    2147328257U, 2147328217U, 2147328203U, 2147328179U, 2147328163U, 2147328143U, 2147328083U, 2147328077U,
    2147328067U, 2147328037U, 2147328031U, 2147327983U, 2147327969U, 2147327929U, 2147327927U, 2147327911U,
    2147327899U, 2147327887U, 2147327839U, 2147327837U, 2147327827U, 2147327789U, 2147327773U, 2147327759U,
    2147327753U, 2147327729U, 2147327719U, 2147327641U, 2147327627U, 2147327573U, 2147327543U, 2147327537U,
    2147327527U, 2147327513U, 2147327473U, 2147327471U, 2147327459U, 2147327453U, 2147327431U, 2147327419U,
    2147327411U, 2147327393U, 2147327387U, 2147327363U, 2147327327U, 2147327323U, 2147327321U, 2147327309U,
    2147327291U, 2147327269U, 2147327257U, 2147327213U, 2147327191U, 2147327089U, 2147327051U, 2147327041U,
    2147327033U, 2147327027U, 2147326999U, 2147326997U, 2147326981U, 2147326949U, 2147326891U, 2147326871U,
    2147326861U, 2147326843U, 2147326829U, 2147326807U, 2147326801U, 2147326793U, 2147326789U, 2147326777U,
    2147326711U, 2147326681U, 2147326679U, 2147326673U, 2147326669U, 2147326619U, 2147326613U, 2147326603U,
    2147326513U, 2147326471U, 2147326409U, 2147326393U, 2147326361U, 2147326319U, 2147326301U, 2147326297U,
    2147326213U, 2147326189U, 2147326157U, 2147326123U, 2147326121U, 2147326099U, 2147326091U, 2147326079U,
    2147326067U, 2147326057U, 2147326037U, 2147326019U, 2147326009U, 2147326007U, 2147326003U, 2147326001U,
    2147325893U, 2147325889U, 2147325857U, 2147325847U, 2147325809U, 2147325797U, 2147325773U, 2147325703U,
    2147325683U, 2147325671U, 2147325647U, 2147325637U, 2147325629U, 2147325571U, 2147325511U, 2147325497U,
    2147325493U, 2147325469U, 2147325463U, 2147325461U, 2147325457U, 2147325409U, 2147325353U, 2147325311U,
    2147325289U, 2147325227U, 2147325217U, 2147325211U, 2147325209U, 2147325137U, 2147325133U, 2147325127U,
    2147325107U, 2147325083U, 2147325077U, 2147325067U, 2147325053U, 2147324951U, 2147324947U, 2147324941U,
    2147324909U, 2147324891U, 2147324849U, 2147324831U, 2147324759U, 2147324737U, 2147324713U, 2147324687U,
    2147324657U, 2147324609U, 2147324581U, 2147324561U, 2147324549U, 2147324503U, 2147324483U, 2147324479U,
    2147324467U, 2147324453U, 2147324441U, 2147324429U, 2147324407U, 2147324363U, 2147324351U, 2147324329U,
    2147324323U, 2147324317U, 2147324299U, 2147324279U, 2147324269U, 2147324261U, 2147324251U, 2147324237U,
    2147324191U, 2147324189U, 2147324149U, 2147324141U, 2147324131U, 2147324129U, 2147324117U, 2147324107U,
    2147324099U, 2147324051U, 2147324041U, 2147324033U, 2147323987U, 2147323967U, 2147323963U, 2147323951U,
    2147323943U, 2147323883U, 2147323859U, 2147323853U, 2147323831U, 2147323819U, 2147323813U, 2147323777U,
    2147323757U, 2147323751U, 2147323729U, 2147323691U, 2147323687U, 2147323681U, 2147323613U, 2147323609U,
    2147323603U, 2147323583U, 2147323553U, 2147323547U, 2147323523U, 2147323517U, 2147323511U, 2147323489U,
    2147323487U, 2147323481U, 2147323471U, 2147323429U, 2147323427U, 2147323351U, 2147323337U, 2147323331U,
    2147323319U, 2147323313U, 2147323307U, 2147323289U, 2147323271U, 2147323259U, 2147323181U, 2147323177U,
    2147323147U, 2147323103U, 2147323081U, 2147323063U, 2147323051U, 2147323027U, 2147323021U, 2147323007U,
    2147322977U, 2147322967U, 2147322953U, 2147322917U, 2147322913U, 2147322901U, 2147322899U, 2147322857U,
    2147322823U, 2147322811U, 2147322799U, 2147322743U, 2147322739U, 2147322733U, 2147322707U, 2147322703U,
    2147322701U, 2147322689U, 2147322673U, 2147322647U, 2147322629U, 2147322607U, 2147322599U, 2147322587U,
    2147322553U, 2147322503U, 2147322497U, 2147322469U, 2147322461U, 2147322451U, 2147322409U, 2147322407U,
    2147322379U, 2147322361U, 2147322349U, 2147322341U, 2147322301U, 2147322283U, 2147322277U, 2147322253U,
    2147322211U, 2147322209U, 2147322181U, 2147322161U, 2147322131U, 2147322119U, 2147322109U, 2147322101U,
    2147322013U, 2147322007U, 2147321999U, 2147321951U, 2147321923U, 2147321881U, 2147321861U, 2147321851U,
    2147321843U, 2147321767U, 2147321753U, 2147321747U, 2147321719U, 2147321713U, 2147321669U, 2147321641U,
    2147321633U, 2147321611U, 2147321597U, 2147321569U, 2147321543U, 2147321497U, 2147321489U, 2147321479U,
    2147321471U, 2147321441U, 2147321437U, 2147321431U, 2147321369U, 2147321359U, 2147321339U, 2147321333U,
    2147321311U, 2147321291U, 2147321287U, 2147321279U, 2147321263U, 2147321227U, 2147321203U, 2147321179U,
    2147321173U, 2147321117U, 2147321083U, 2147321039U, 2147321027U, 2147321021U, 2147320997U, 2147320969U,
    2147320961U, 2147320951U, 2147320919U, 2147320909U, 2147320837U, 2147320829U, 2147320823U, 2147320817U,
    2147320793U, 2147320783U, 2147320781U, 2147320771U, 2147320751U, 2147320727U, 2147320709U, 2147320697U,
    2147320673U, 2147320667U, 2147320657U, 2147320633U, 2147320621U, 2147320613U, 2147320559U, 2147320547U,
    2147320531U, 2147320529U, 2147320501U, 2147320489U, 2147320481U, 2147320471U, 2147320459U, 2147320451U,
    2147320423U, 2147320421U, 2147320393U, 2147320361U, 2147320313U, 2147320267U, 2147320249U, 2147320223U,
    2147320193U, 2147320187U, 2147320159U, 2147320139U, 2147320061U, 2147320057U, 2147320013U, 2147319959U,
    2147319931U, 2147319883U, 2147319869U, 2147319841U, 2147319833U, 2147319817U, 2147319799U, 2147319791U,
    2147319739U, 2147319701U, 2147319697U, 2147319661U, 2147319631U, 2147319617U, 2147319607U, 2147319593U,
    2147319571U, 2147319557U, 2147319547U, 2147319541U, 2147319533U, 2147319497U, 2147319479U, 2147319469U,
    2147319431U, 2147319407U, 2147319403U, 2147319401U, 2147319367U, 2147319331U, 2147319313U, 2147319299U,
    2147319271U, 2147319241U, 2147319227U, 2147319211U, 2147319203U, 2147319197U, 2147319137U, 2147319103U,
    2147319089U, 2147319071U, 2147319061U, 2147319059U, 2147319043U, 2147319037U, 2147318989U, 2147318969U,
    2147318897U, 2147318879U, 2147318827U, 2147318783U, 2147318759U, 2147318741U, 2147318729U, 2147318713U,
    2147318669U, 2147318609U, 2147318581U, 2147318549U, 2147318489U, 2147318449U, 2147318431U, 2147318423U,
    2147318389U, 2147318377U, 2147318363U, 2147318351U, 2147318339U, 2147318291U, 2147318237U, 2147318227U,
    2147318221U, 2147318213U, 2147318207U, 2147318179U, 2147318143U, 2147318099U, 2147318087U, 2147318083U,
    2147318053U, 2147318029U, 2147318023U, 2147317979U, 2147317943U, 2147317937U, 2147317901U, 2147317883U,
    2147317877U, 2147317871U, 2147317859U, 2147317853U, 2147317841U, 2147317819U, 2147317793U, 2147317769U,
    2147317763U, 2147317747U, 2147317721U, 2147317649U, 2147317633U, 2147317619U, 2147317603U, 2147317577U,
    2147317561U, 2147317553U, 2147317537U, 2147317519U, 2147317451U, 2147317429U, 2147317427U, 2147317391U,
    2147317373U, 2147317351U, 2147317321U, 2147317307U, 2147317297U, 2147317253U, 2147317223U, 2147317219U,
    2147317201U, 2147317177U, 2147317111U, 2147317097U, 2147317069U, 2147317057U, 2147317037U, 2147317031U,
    2147317013U, 2147316967U, 2147316953U, 2147316949U, 2147316947U, 2147316931U, 2147316923U, 2147316917U,
    2147316883U, 2147316877U, 2147316841U, 2147316833U, 2147316817U, 2147316811U, 2147316799U, 2147316763U,
    2147316709U, 2147316707U, 2147316643U, 2147316607U, 2147316581U, 2147316569U, 2147316551U, 2147316533U,
    2147316517U, 2147316511U, 2147316503U, 2147316481U, 2147316419U, 2147316383U, 2147316371U, 2147316361U,
    2147316313U, 2147316221U, 2147316211U, 2147316209U, 2147316173U, 2147316169U, 2147316137U, 2147316131U,
    2147316113U, 2147316109U, 2147316089U, 2147316071U, 2147316043U, 2147315993U, 2147315981U, 2147315971U,
    2147315953U, 2147315941U, 2147315939U, 2147315923U, 2147315851U, 2147315803U, 2147315791U, 2147315783U,
    2147315771U, 2147315749U, 2147315699U, 2147315689U, 2147315671U, 2147315641U, 2147315623U, 2147315593U,
    2147315579U, 2147315537U, 2147315531U, 2147315503U, 2147315501U, 2147315479U, 2147315477U, 2147315459U,
    2147315447U, 2147315431U, 2147315413U, 2147315321U, 2147315279U, 2147315257U, 2147315249U, 2147315231U,
    2147315201U, 2147315173U, 2147315147U, 2147315143U, 2147315119U, 2147315047U, 2147315011U, 2147314997U,
    2147314993U, 2147314987U, 2147314969U, 2147314919U, 2147314823U, 2147314817U, 2147314801U, 2147314787U,
    2147314781U, 2147314747U, 2147314733U, 2147314723U, 2147314711U, 2147314681U, 2147314643U, 2147314639U,
    2147314577U, 2147314553U, 2147314537U, 2147314531U, 2147314529U, 2147314513U, 2147314501U, 2147314493U,
    2147314487U, 2147314459U, 2147314447U, 2147314441U, 2147314409U, 2147314397U, 2147314357U, 2147314297U,
    2147314291U, 2147314243U, 2147314189U, 2147314171U, 2147314163U, 2147314157U, 2147314139U, 2147314087U,
    2147314069U, 2147314067U, 2147313997U, 2147313943U, 2147313941U, 2147313913U, 2147313881U, 2147313853U,
    2147313851U, 2147313829U, 2147313811U, 2147313799U, 2147313793U, 2147313767U, 2147313743U, 2147313739U,
    2147313731U, 2147313691U, 2147313689U, 2147313683U, 2147313677U, 2147313659U, 2147313653U, 2147313647U,
    2147313601U, 2147313599U, 2147313583U, 2147313551U, 2147313527U, 2147313517U, 2147313499U, 2147313491U,
    2147313461U, 2147313433U, 2147313397U, 2147313383U, 2147313361U, 2147313359U, 2147313353U, 2147313307U,
    2147313293U, 2147313271U, 2147313269U, 2147313251U, 2147313193U, 2147313187U, 2147313173U, 2147313121U,
    2147313109U, 2147313089U, 2147313043U, 2147313041U, 2147313011U, 2147312969U, 2147312957U, 2147312953U,
    2147312941U, 2147312903U, 2147312899U, 2147312833U, 2147312813U, 2147312779U, 2147312731U, 2147312719U,
    2147312689U, 2147312677U, 2147312633U, 2147312617U, 2147312603U, 2147312597U, 2147312581U, 2147312579U,
    2147312539U, 2147312513U, 2147312507U, 2147312477U, 2147312467U, 2147312429U, 2147312333U, 2147312329U,
    2147312291U, 2147312281U, 2147312263U, 2147312243U, 2147312239U, 2147312231U, 2147312207U, 2147312203U,
    2147312201U, 2147312191U, 2147312149U, 2147312129U, 2147312081U, 2147312053U, 2147312029U, 2147312023U,
    2147311997U, 2147311979U, 2147311963U, 2147311949U, 2147311921U, 2147311919U, 2147311913U, 2147311891U,
    2147311787U, 2147311753U, 2147311741U, 2147311739U, 2147311709U, 2147311697U, 2147311693U, 2147311669U,
    2147311651U, 2147311643U, 2147311637U, 2147311591U, 2147311553U, 2147311501U, 2147311493U, 2147311477U,
    2147311469U, 2147311427U, 2147311423U, 2147311421U, 2147311381U, 2147311367U, 2147311363U, 2147311357U,
    2147311319U, 2147311297U, 2147311273U, 2147311249U, 2147311247U, 2147311223U, 2147311219U, 2147311189U,
    2147311183U, 2147311171U, 2147311139U, 2147311121U, 2147311109U, 2147311093U, 2147311051U, 2147311037U,
    2147311031U, 2147311013U, 2147310983U, 2147310961U, 2147310923U, 2147310877U, 2147310857U, 2147310839U,
    2147310827U, 2147310769U, 2147310757U, 2147310733U, 2147310727U, 2147310721U, 2147310703U, 2147310701U,
    2147310689U, 2147310673U, 2147310661U, 2147310653U, 2147310623U, 2147310617U, 2147310553U, 2147310551U,
    2147310547U, 2147310527U, 2147310499U, 2147310493U, 2147310469U, 2147310457U, 2147310421U, 2147310401U,
    2147310367U, 2147310331U, 2147310293U, 2147310287U, 2147310283U, 2147310247U, 2147310223U, 2147310173U,
    2147310167U, 2147310163U, 2147310157U, 2147310127U, 2147310091U, 2147310071U, 2147310019U, 2147310007U,
    2147309993U, 2147309987U, 2147309977U, 2147309951U, 2147309887U, 2147309869U, 2147309863U, 2147309809U,
    2147309783U, 2147309771U, 2147309753U, 2147309737U, 2147309707U, 2147309623U, 2147309569U, 2147309561U,
    2147309557U, 2147309471U, 2147309459U, 2147309443U, 2147309419U, 2147309407U, 2147309399U, 2147309369U,
    2147309341U, 2147309323U, 2147309299U, 2147309243U, 2147309221U, 2147309183U, 2147309159U, 2147309137U,
    2147309077U, 2147309057U, 2147309041U, 2147309039U, 2147309027U, 2147309011U, 2147308993U, 2147308991U,
    2147308987U, 2147308979U, 2147308951U, 2147308937U, 2147308907U, 2147308873U, 2147308861U, 2147308843U,
    2147308841U, 2147308817U, 2147308789U, 2147308753U, 2147308747U, 2147308739U, 2147308733U, 2147308721U,
    2147308663U, 2147308619U, 2147308613U, 2147308609U, 2147308577U, 2147308571U, 2147308561U, 2147308529U,
    2147308511U, 2147308489U, 2147308469U, 2147308453U, 2147308447U, 2147308441U, 2147308417U, 2147308399U,
    2147308349U, 2147308327U, 2147308321U, 2147308307U, 2147308249U, 2147308181U, 2147308169U, 2147308147U,
    2147308117U, 2147308099U, 2147308049U, 2147308027U, 2147308021U, 2147308019U, 2147308003U, 2147307979U,
};

}  // namespace detlab
