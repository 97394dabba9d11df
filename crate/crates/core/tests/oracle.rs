//! Values minted with mpmath at 40 digits and frozen here.

#![allow(clippy::approx_constant, clippy::excessive_precision)]

use ptrig::hypergeom::{clausen_3f2, hyp2f1, Hyp2F1Params, Hyp3F2Params};
use ptrig::ptrig::{eval, EvalMethod, FnId, PtrigInput};
use ptrig::special::{b_p, c_p, pi_p, BpRoute, PiRoute};

const FN_ORACLE: &[(FnId, f64, f64, f64)] = &[
    (FnId::Arcsin, 1.5, 0.05, 0.050149945579055726995),
    (FnId::Arcsin, 1.5, 0.3, 0.31440604645067307654),
    (FnId::Arcsin, 1.5, 0.62, 0.73141316542636519747),
    (FnId::Arcsin, 1.5, 0.9, 1.351214663367249964),
    (FnId::Arcsin, 1.5, 0.99, 1.9249507779069040491),
    (FnId::Arcsin, 2.0, 0.05, 0.050020856805770014663),
    (FnId::Arcsin, 2.0, 0.3, 0.30469265401539750797),
    (FnId::Arcsin, 2.0, 0.62, 0.66874270320237175414),
    (FnId::Arcsin, 2.0, 0.9, 1.1197695149986341867),
    (FnId::Arcsin, 2.0, 0.99, 1.4292568534704694005),
    (FnId::Arcsin, 3.5, 0.05, 0.05000008873375310639),
    (FnId::Arcsin, 3.5, 0.3, 0.30028320415697555261),
    (FnId::Arcsin, 3.5, 0.62, 0.62794517458011733275),
    (FnId::Arcsin, 3.5, 0.9, 0.95623394529544082501),
    (FnId::Arcsin, 3.5, 0.99, 1.1115318939943942787),
    (FnId::Arcsin, 7.0, 0.05, 0.050000000000697544643),
    (FnId::Arcsin, 7.0, 0.3, 0.30000117168524046529),
    (FnId::Arcsin, 7.0, 0.62, 0.62039415089902312388),
    (FnId::Arcsin, 7.0, 0.9, 0.90917948674926968669),
    (FnId::Arcsin, 7.0, 0.99, 1.017284120394077175),
    (FnId::Arccos, 1.5, 0.05, 1.9707671046080370165),
    (FnId::Arccos, 1.5, 0.3, 1.3069210682034940155),
    (FnId::Arccos, 1.5, 0.62, 0.76291378612380373568),
    (FnId::Arccos, 1.5, 0.9, 0.28923214661418067928),
    (FnId::Arccos, 1.5, 0.99, 0.060964617924401588667),
    (FnId::Arccos, 2.0, 0.05, 1.5207754699891266046),
    (FnId::Arccos, 2.0, 0.3, 1.2661036727794991113),
    (FnId::Arccos, 2.0, 0.62, 0.90205362359252486509),
    (FnId::Arccos, 2.0, 0.9, 0.45102681179626243254),
    (FnId::Arccos, 2.0, 0.99, 0.14153947332442721875),
    (FnId::Arccos, 3.5, 0.05, 1.1478471983556324391),
    (FnId::Arccos, 3.5, 0.3, 1.1282653075713310157),
    (FnId::Arccos, 3.5, 0.62, 1.019452231751131987),
    (FnId::Arccos, 3.5, 0.9, 0.73042765758718585479),
    (FnId::Arccos, 3.5, 0.99, 0.38320451488378788231),
    (FnId::Arccos, 7.0, 0.05, 1.0343760526626298155),
    (FnId::Arccos, 7.0, 0.3, 1.0342545447533888907),
    (FnId::Arccos, 7.0, 0.62, 1.0247745874912504814),
    (FnId::Arccos, 7.0, 0.9, 0.92158714548043192079),
    (FnId::Arccos, 7.0, 0.99, 0.68185763792814935161),
    (FnId::Arctan, 0.5, 0.05, 0.04360781787592571964),
    (FnId::Arctan, 0.5, 0.3, 0.22187604963691163544),
    (FnId::Arctan, 0.5, 0.62, 0.41327659381464271728),
    (FnId::Arctan, 0.5, 0.9, 0.56305877063093963625),
    (FnId::Arctan, 0.5, 0.99, 0.60869936794856948168),
    (FnId::Arctan, 1.0, 0.05, 0.048790164169432003065),
    (FnId::Arctan, 1.0, 0.3, 0.26236426446749105204),
    (FnId::Arctan, 1.0, 0.62, 0.48242614924429270696),
    (FnId::Arctan, 1.0, 0.9, 0.64185388617239477599),
    (FnId::Arctan, 1.0, 0.99, 0.68813463873640102737),
    (FnId::Arctan, 1.5, 0.05, 0.049777943107907540392),
    (FnId::Arctan, 1.5, 0.3, 0.28209252603827382167),
    (FnId::Arctan, 1.5, 0.62, 0.52635281171956564719),
    (FnId::Arctan, 1.5, 0.9, 0.69516261785576086209),
    (FnId::Arctan, 1.5, 0.99, 0.74208264314636939968),
    (FnId::Arctan, 2.0, 0.05, 0.04995839572194276141),
    (FnId::Arctan, 2.0, 0.3, 0.291456794477867092),
    (FnId::Arctan, 2.0, 0.62, 0.55499572733858676242),
    (FnId::Arctan, 2.0, 0.9, 0.73281510178650659164),
    (FnId::Arctan, 2.0, 0.99, 0.7803730800666358989),
    (FnId::Arctan, 3.5, 0.05, 0.049999689439885842589),
    (FnId::Arctan, 3.5, 0.3, 0.299022217220096094),
    (FnId::Arctan, 3.5, 0.62, 0.59656214939729215678),
    (FnId::Arctan, 3.5, 0.9, 0.79844364380141281885),
    (FnId::Arctan, 3.5, 0.99, 0.84790327180120848334),
    (FnId::Arctan, 7.0, 0.05, 0.049999999995117187502),
    (FnId::Arctan, 7.0, 0.3, 0.29999179970645118248),
    (FnId::Arctan, 7.0, 0.62, 0.61732081048342901494),
    (FnId::Arctan, 7.0, 0.9, 0.8566177101289156571),
    (FnId::Arctan, 7.0, 0.99, 0.91039175177889425337),
    (FnId::Arcsinh, 0.5, 0.05, 0.038117782360918599346),
    (FnId::Arcsinh, 0.5, 0.3, 0.16579032964437455303),
    (FnId::Arcsinh, 0.5, 0.62, 0.2804682051920294763),
    (FnId::Arcsinh, 0.5, 0.9, 0.36064186445981197096),
    (FnId::Arcsinh, 0.5, 0.99, 0.38378808494067948089),
    (FnId::Arcsinh, 1.0, 0.05, 0.048790164169432003065),
    (FnId::Arcsinh, 1.0, 0.3, 0.26236426446749105204),
    (FnId::Arcsinh, 1.0, 0.62, 0.48242614924429270696),
    (FnId::Arcsinh, 1.0, 0.9, 0.64185388617239477599),
    (FnId::Arcsinh, 1.0, 0.99, 0.68813463873640102737),
    (FnId::Arcsinh, 1.5, 0.05, 0.04985179063310668207),
    (FnId::Arcsinh, 1.5, 0.3, 0.2878727196228738632),
    (FnId::Arcsinh, 1.5, 0.62, 0.55499375462415462631),
    (FnId::Arcsinh, 1.5, 0.9, 0.75472993563072286171),
    (FnId::Arcsinh, 1.5, 0.99, 0.81302532182409238524),
    (FnId::Arcsinh, 2.0, 0.05, 0.049979190069348665231),
    (FnId::Arcsinh, 2.0, 0.3, 0.2956730475634224391),
    (FnId::Arcsinh, 2.0, 0.62, 0.58589893225916797142),
    (FnId::Arcsinh, 2.0, 0.9, 0.80886693565278246251),
    (FnId::Arcsinh, 2.0, 0.99, 0.87428481218729492676),
    (FnId::Arcsinh, 3.5, 0.05, 0.049999911268040579835),
    (FnId::Arcsinh, 3.5, 0.3, 0.29971980876705578468),
    (FnId::Arcsinh, 3.5, 0.62, 0.61306941103192278741),
    (FnId::Arcsinh, 3.5, 0.9, 0.86781455445146776763),
    (FnId::Arcsinh, 3.5, 0.99, 0.94365065871223714561),
    (FnId::Arcsinh, 7.0, 0.05, 0.049999999999302455357),
    (FnId::Arcsinh, 7.0, 0.3, 0.29999882847093811647),
    (FnId::Arcsinh, 7.0, 0.62, 0.61961422120093903415),
    (FnId::Arcsinh, 7.0, 0.9, 0.89322923985920275146),
    (FnId::Arcsinh, 7.0, 0.99, 0.97681475345409764087),
    (FnId::Arctanh, 0.5, 0.05, 0.058978770899175347213),
    (FnId::Arctanh, 0.5, 0.3, 0.49147383824055312239),
    (FnId::Arctanh, 0.5, 0.62, 1.5218914587087684799),
    (FnId::Arctanh, 0.5, 0.9, 4.0421114153571517318),
    (FnId::Arctanh, 0.5, 0.99, 8.6016410040276132544),
    (FnId::Arctanh, 1.0, 0.05, 0.051293294387550533426),
    (FnId::Arctanh, 1.0, 0.3, 0.35667494393873237891),
    (FnId::Arctanh, 1.0, 0.62, 0.96758402626170559861),
    (FnId::Arctanh, 1.0, 0.9, 2.302585092994045684),
    (FnId::Arctanh, 1.0, 0.99, 4.605170185988091368),
    (FnId::Arctanh, 1.5, 0.05, 0.050225182115326278451),
    (FnId::Arctanh, 1.5, 0.3, 0.32202116573466861835),
    (FnId::Arctanh, 1.5, 0.62, 0.79965162740503398246),
    (FnId::Arctanh, 1.5, 0.9, 1.7417331847823752942),
    (FnId::Arctanh, 1.5, 0.99, 3.2921457353316566956),
    (FnId::Arctanh, 2.0, 0.05, 0.050041729278491268246),
    (FnId::Arctanh, 2.0, 0.3, 0.30951960420311171547),
    (FnId::Arctanh, 2.0, 0.62, 0.72500508775299915279),
    (FnId::Arctanh, 2.0, 0.9, 1.47221948958322023),
    (FnId::Arctanh, 2.0, 0.99, 2.6466524123622461977),
    (FnId::Arctanh, 3.5, 0.05, 0.050000310569879782415),
    (FnId::Arctanh, 3.5, 0.3, 0.3009941871933768357),
    (FnId::Arctanh, 3.5, 0.62, 0.64900140386278936863),
    (FnId::Arctanh, 3.5, 0.9, 1.1509366359139704746),
    (FnId::Arctanh, 3.5, 0.99, 1.8423321432471075802),
    (FnId::Arctanh, 7.0, 0.05, 0.050000000004882812502),
    (FnId::Arctanh, 7.0, 0.3, 0.30000820220673646485),
    (FnId::Arctanh, 7.0, 0.62, 0.6227817766300407627),
    (FnId::Arctanh, 7.0, 0.9, 0.97469013985769164672),
    (FnId::Arctanh, 7.0, 0.99, 1.3451177075241580318),
];
const HYP2F1_ORACLE: &[(f64, f64, f64, f64, f64)] = &[
    (0.5, 0.5, 1.5, 0.25, 1.0471975511965977462),
    (1.0, 1.0, 2.0, 0.9, 2.5584278811044953881),
    (0.3, 1.7, 2.2, 0.6, 1.2196602626555900041),
    (2.0, 0.25, 2.25, -0.8, 0.87539937398439689983),
    (1.0, 1.0, 2.0, -5.0, 0.35835189384561100016),
    (0.7, 0.2, 1.1, -0.4, 0.95701356999406975263),
    (-3.0, 2.0, 1.5, 0.7, -0.075200000000000001421),
    (1.5, 2.5, 0.5, 0.3, 7.6661893310077720376),
];
const HYP3F2_ORACLE: &[(f64, f64, f64, f64, f64, f64, f64)] = &[
    (0.25, 0.25, 0.75, 0.5, 1.25, 0.0625, 1.0048106006579023206),
    (0.75, 0.75, 1.25, 1.5, 1.75, 0.0625, 1.0172868129286902139),
    (1.0, 1.0, 1.0, 2.0, 2.0, 0.5, 1.1644810529300250118),
    (2.0, 0.5, 1.0, 1.5, 3.0, 0.95, 1.4686539361040651159),
    (0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 1.0321522967265097424),
];
const PI_P_ORACLE: &[(f64, f64)] = &[
    (1.25, 8.5516746569247609074),
    (2.0, 3.1415926535897932385),
    (3.0, 2.4183991523122904675),
    (4.5, 2.1722002424352314645),
    (10.0, 2.0332814769261039263),
];
const BC_ORACLE: &[(f64, f64, f64)] = &[
    (0.5, 0.61370563888010938117, 0.38629436111989061883),
    (1.0, 0.69314718055994530942, 0.69314718055994530942),
    (2.0, 0.78539816339744830962, 0.88137358701954302523),
    (3.0, 0.83564884826472105334, 0.93770699057533886072),
    (7.0, 0.91547952683760158139, 0.98589447998653447443),
];

fn close(got: f64, want: f64, rel: f64) -> bool {
    (got - want).abs() <= rel * want.abs().max(1e-300)
}

#[test]
fn functions_match_oracle_on_every_route() {
    for &(func, p, x, want) in FN_ORACLE {
        let input = PtrigInput::new(func, p, x).unwrap();
        for method in [EvalMethod::Auto, EvalMethod::Series, EvalMethod::Quadrature] {
            let r = eval(input, method).unwrap();
            assert!(close(r.value, want, 1e-12), "{func} p={p} x={x} {method:?}: {} vs {want}", r.value);
            // The error estimate must cover the true error.
            let slack = 4.0 * f64::EPSILON * want.abs();
            assert!((r.value - want).abs() <= r.abs_err + slack, "{func} p={p} x={x} {method:?}: estimate too small");
        }
    }
}

#[test]
fn gauss_matches_oracle() {
    for &(a, b, c, z, want) in HYP2F1_ORACLE {
        let r = hyp2f1(Hyp2F1Params::new(a, b, c).unwrap(), z).unwrap();
        assert!(close(r.value, want, 1e-13), "2F1({a},{b};{c};{z}) = {} vs {want}", r.value);
        assert!((r.value - want).abs() <= r.abs_err + 4.0 * f64::EPSILON * want.abs());
    }
}

#[test]
fn clausen_matches_oracle() {
    for &(a1, a2, a3, b1, b2, z, want) in HYP3F2_ORACLE {
        let r = clausen_3f2(Hyp3F2Params::new(a1, a2, a3, b1, b2).unwrap(), z).unwrap();
        assert!(close(r.value, want, 1e-13), "3F2 at z={z}: {} vs {want}", r.value);
        assert!((r.value - want).abs() <= r.abs_err + 4.0 * f64::EPSILON * want.abs());
    }
}

#[test]
fn constants_match_oracle() {
    for &(p, want) in PI_P_ORACLE {
        for route in [PiRoute::Sine, PiRoute::Beta, PiRoute::Limit] {
            let v = pi_p(p, route).unwrap();
            assert!(close(v, want, 1e-12), "pi_p({p}) {route:?}: {v} vs {want}");
        }
    }
    for &(p, b, c) in BC_ORACLE {
        for route in [BpRoute::Digamma, BpRoute::Hyp] {
            assert!(close(b_p(p, route).unwrap(), b, 1e-12), "b_p({p}) {route:?}");
        }
        assert!(close(c_p(p).unwrap(), c, 1e-12), "c_p({p})");
    }
}
