use super::*;
use crate::operads::UnitOperad;

fn small() -> Bounds {
    Bounds {
        max_s: 2,
        max_t: 2,
        max_r: 2,
        ..Bounds::default()
    }
}

#[test]
fn unit_axioms_hold_for_nap() {
    for law in [Law::U1, Law::U2] {
        let r = check_axiom(law, &Nap, &Bounds::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.instances > 0);
        assert!(r.witness.is_none());
    }
}

#[test]
fn eq1_dichotomy_at_size_two() {
    assert_eq!(check_eq1(&Nap, &small()).unwrap().verdict, Verdict::Holds);
    assert_eq!(check_eq1(&ShuffleMag, &small()).unwrap().verdict, Verdict::Holds);
    for r in [check_eq1(&PreLie, &small()).unwrap(), check_eq1(&Mag, &small()).unwrap()] {
        assert_eq!(r.verdict, Verdict::Counterexample);
        assert!(r.is_expected());
        let w = r.witness.unwrap();
        assert_ne!(w.lhs, w.rhs);
    }
}

#[test]
fn reports_are_deterministic() {
    assert_eq!(check_eq1(&Mag, &small()).unwrap(), check_eq1(&Mag, &small()).unwrap());
}

#[test]
fn a1_holds_for_mag_shuffle() {
    assert_eq!(check_axiom(Law::A1, &ShuffleMag, &Bounds::default()).unwrap().verdict, Verdict::Holds);
}

#[test]
fn eq1_is_not_an_axiom() {
    assert!(matches!(check_axiom(Law::Eq1, &Nap, &small()), Err(Error::NotAnAxiom(_))));
}

#[test]
fn cap_guards_the_sweep() {
    let b = Bounds { cap: 10, ..Bounds::default() };
    assert!(matches!(check_axiom(Law::A1, &Nap, &b), Err(Error::BoundsTooLarge { .. })));
    let b = Bounds { cap: 10, allow_large: true, ..small() };
    assert!(check_axiom(Law::A1, &Nap, &b).is_ok());
    let huge = Bounds { max_s: 9, ..Bounds::default() };
    assert!(matches!(check_axiom(Law::U2, &Nap, &huge), Err(Error::BoundsTooLarge { .. })));
}

#[test]
fn bounds_parse() {
    let b: Bounds = "s=2, t=1,total=3".parse().unwrap();
    assert_eq!((b.max_s, b.max_t, b.max_r, b.max_total), (2, 1, 2, Some(3)));
    assert!("s=0".parse::<Bounds>().is_err());
    assert!("q=1".parse::<Bounds>().is_err());
    assert!("s".parse::<Bounds>().is_err());
}

/// Violates U2 on purpose: composing with a unit forgets the outer element.
#[derive(Clone)]
struct Broken;

impl Operad for Broken {
    type Elem = crate::operads::Corolla;
    fn name(&self) -> String {
        "broken".into()
    }
    fn basis(&self, labels: &FiniteSet) -> Vec<Self::Elem> {
        Com.basis(labels)
    }
    fn ground(&self, x: &Self::Elem) -> FiniteSet {
        Com.ground(x)
    }
    fn compose(&self, x: &Self::Elem, s: &Label, y: &Self::Elem) -> Result<LinComb<Self::Elem>> {
        Ok(Com.compose(x, s, y)?.scale(&crate::foundations::coeff(2)))
    }
    fn relabel(&self, x: &Self::Elem, sigma: &Bijection) -> Result<Self::Elem> {
        Com.relabel(x, sigma)
    }
    fn unit(&self, s: &Label) -> Self::Elem {
        Com.unit(s)
    }
    fn parse_elem(&self, text: &str) -> Result<Self::Elem> {
        Com.parse_elem(text)
    }
}

#[test]
fn broken_fixture_is_refused() {
    assert!(matches!(
        check_composition_operad(CompositeKind::Box, &Broken, &small()),
        Err(Error::FixtureFailed { .. })
    ));
}

#[test]
fn composition_suite_over_unit_operad() {
    let b = Bounds { max_total: Some(3), ..Bounds::default() };
    for r in check_composition_operad(CompositeKind::Diamond, &UnitOperad, &b).unwrap() {
        assert_eq!(r.verdict, Verdict::Holds, "{r}");
    }
}

#[test]
fn oracle_and_reduction_agree_on_small_bounds() {
    for kind in OracleKind::ALL {
        assert_eq!(check_oracle(kind, &small()).unwrap().verdict, Verdict::Holds);
    }
    assert_eq!(check_reduction(CompositeKind::Box, &small()).unwrap().verdict, Verdict::Holds);
    assert_eq!(check_reduction(CompositeKind::Diamond, &small()).unwrap().verdict, Verdict::Holds);
}

#[test]
fn law_names_round_trip() {
    for law in [Law::A1, Law::Eq1, Law::Reduction] {
        assert_eq!(law.to_string().parse::<Law>().unwrap(), law);
    }
    assert_eq!(serde_json::to_string(&Law::Eq1).unwrap(), "\"EQ1\"");
}
