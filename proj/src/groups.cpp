#include "hesim/elgamal.hpp"

namespace hesim {

// Fixed safe-prime groups, one per supported modulus length. Each p passes
// is_probable_prime(p, 64) and (p-1)/2 is prime as well; the stated g is
// verified to have order p-1 (see tests). Generated offline with the same sieve-and-
// Miller-Rabin procedure as gen_safe_prime.
namespace {

const char* kGroup1024 =
    "154399102934569600166823803838226139648759786030111171988400935674859574668844680432124183898758443485965272661917046820367033309958285909522020953717087928547642589952498590777686462912307603335283530401362078943760871626869531994137460716515407130141525110054578845564820241893220540188997204575622563700139";

const char* kGroup2048 =
    "30421233902528753707879641680521134330037591190709894115711885186014559160568104965698186279195966634458875933249001950219687866733538021729629403727661119975664424620189216297327873204241976622239035273515854220213569398969746418317406135414048331098904641373632754807777557036561937442774123638424917861654392165203031250017665207333938421004734050033159526542332383479997993989571976096949603602471832774075004825404744914450649129288112813820076713351854856561445224593737715229771585543985970593321985566860972719091606583258280015435974115183421344747951084714444681505557232780444202829932179717241370613665507";

const char* kGroup3072 =
    "5617260254435791255073775337659307598701476219139302038757007691753952814701368135523196761720213424520789376009957995005991589379007263993780966307475622336291755747527543424428072098679524392452819603872933886482820604275888261930806828145077138967414381294378277101711100771835297952619206557155942941324153798689024858333442005121215458124101470854536098879977729481841825787430273969121295059555573487812070160368062026439689329671376254841882115211741698267046255567096691633248893883038567994571210990045093401684417168429191285971828427635508606785276834295662596219707291829178623959106703434035575636777260647379566037264428666912173287633171187868649289360895192890712179629101879408239685179594110868332562773826837030963968888344741328290505521978433334040248078308986717160806712013793687120782282170444394162300583884463010342543131536098251711420314091609563701643154240834083726300568234503481599408796203739";

const char* kGroup7680 =
    "70997401459294843187124413591603910354629564682477425125045889761181746997285201925515605840781449367978319622778302473214912721430476757792865943230419224555653045004727224442549478370920678856751503009573884976894719298422761405710302844505733259870203499313277235751548266922350030769445294190386187231271164586336637480101765545301004573466979130913467745965879483518825786622919802634412378976947242033657177603860379795872965419332230440084320287101468859164519624071337017888469591864558531160774998029439969145366237468924876321713056327790960008671765198251166905984828416503541075417879277568397031510951417261489865564682218290355648451136432072392071443544790869186530512092905199005109066348233778474668546378937431053019399079726226270996872843772023370561334937657446058920563229023541782873470939366199746233345161214395656518863054335554834838884871066103123914218988675443250704342915705457599527594722696740474073448813910308816331707256116334809016568902164404452055817273480614842626379560781368544030855477461905374095009967639083891513303206635697739903011782753804420218257843570838682240159995657094089865226569542919648266985341778087021435796456546741347048113707160914083339538627891435599771085002386493297736479824148270101964237674952693234465581138761580314307061955439975366887577025036237315745479464601423688008228047961074129203574803452173092381786277558875631094114975282129460894806445483403519055992030702920341143578422532938083485678812630072015227051482896622810245265600279317381359306661390425517398045733942479849259537547411904889879662159948694373992723761257373533675456555188357852759148401219091083273555758437542060279094364006134060696320576914983199802491317028329522406387396707408295315552690648906469689016519871166933687070851222270192108799888410351413025387935169954083716528373741600050998193842428700325966203303065945199345240938769889696883118587190106517790888774804168686897773314180708807094215366729389060094873650127674577971600457243879287253124256969694642173351015436983691832861645278817401580236366532238969454408141520729819655919322154389710004303541342821439957173414851065297826538876703211138673727665553352854907258709946844289317764962174646981362657013585928504030852938303656781679267516663362289225946664991524112622335396395439";

}  // namespace

std::optional<std::pair<BigInt, BigInt>> builtin_group(unsigned bits) {
    switch (bits) {
        case 1024: return std::make_pair(BigInt(kGroup1024), BigInt(2));
        case 2048: return std::make_pair(BigInt(kGroup2048), BigInt(2));
        case 3072: return std::make_pair(BigInt(kGroup3072), BigInt(2));
        case 7680: return std::make_pair(BigInt(kGroup7680), BigInt(7));
        default: return std::nullopt;
    }
}

}  // namespace hesim
