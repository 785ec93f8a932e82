//! Exhaustive verification of the operad axioms on small instances.
//!
//! Every sweep enumerates basis tuples over fixed disjoint alphabets
//! (`1, 2, 3, …` for `S`, `a, b, …` for `T`, `x, y, …` for `R`), compares
//! both sides exactly and keeps the first failure in enumeration order.

mod oracle;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::composition::{box_compose, diamond_compose, lift_singletons, lower_singletons, MagElement, MagOver, NapElement, NapOver};
use crate::error::{Error, Result};
use crate::foundations::{Bijection, FiniteSet, Label, LinComb};
use crate::operads::{eq1_sides, nap_compose, shuffle_mag_compose, Com, Mag, Nap, Operad, PreLie, RootedOperad, ShuffleMag};
use crate::trees::Tree;

pub use oracle::{brute_force_oracle_compose, OracleKind, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Law {
    A1,
    A2,
    N1,
    N2,
    U1,
    U2,
    #[serde(rename = "EQ1")]
    Eq1,
    /// Agreement of a composition with [`brute_force_oracle_compose`].
    #[serde(rename = "ORACLE")]
    Oracle,
    /// `□` and `◇` over singleton blocks against NAP and shuffle-Mag.
    #[serde(rename = "REDUCTION")]
    Reduction,
}

impl Law {
    pub const AXIOMS: [Law; 6] = [Law::A1, Law::A2, Law::N1, Law::N2, Law::U1, Law::U2];

    pub fn id(self) -> &'static str {
        match self {
            Law::A1 => "A1",
            Law::A2 => "A2",
            Law::N1 => "N1",
            Law::N2 => "N2",
            Law::U1 => "U1",
            Law::U2 => "U2",
            Law::Eq1 => "EQ1",
            Law::Oracle => "ORACLE",
            Law::Reduction => "REDUCTION",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Law::A1, Law::A2, Law::N1, Law::N2, Law::U1, Law::U2, Law::Eq1, Law::Oracle, Law::Reduction]
            .into_iter()
            .find(|l| l.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::parse(0, format!("unknown law `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Counterexample,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Holds => "holds",
            Verdict::Counterexample => "counterexample",
        })
    }
}

/// The offending instance with both sides fully evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub subject: String,
    pub instances: u64,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl LawReport {
    pub fn expected(&self) -> Verdict {
        expected_verdict(self.law, &self.subject)
    }

    pub fn is_expected(&self) -> bool {
        self.verdict == self.expected()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let note = if self.is_expected() { "" } else { "  UNEXPECTED" };
        write!(f, "{:<9} {:<16} {:<14} {:>7} instances{note}", self.law, self.subject, self.verdict, self.instances)?;
        if let Some(w) = &self.witness {
            write!(f, "\n    at {}\n    lhs = {}\n    rhs = {}", w.description, w.lhs, w.rhs)?;
        }
        Ok(())
    }
}

/// The exchange identity is known to fail for Pre-Lie and for Mag with the
/// grafting composition; every other check is expected to hold.
pub fn expected_verdict(law: Law, subject: &str) -> Verdict {
    match (law, subject) {
        (Law::Eq1, "prelie" | "mag") => Verdict::Counterexample,
        _ => Verdict::Holds,
    }
}

/// Size limits for a sweep.
///
/// `max_total` bounds the ground set of the final result, for instance
/// `|S| + |T| + |R| - 2` for the associativity laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_s: usize,
    pub max_t: usize,
    pub max_r: usize,
    pub max_total: Option<usize>,
    pub cap: u64,
    pub allow_large: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_s: 3,
            max_t: 2,
            max_r: 2,
            max_total: None,
            cap: 2_000_000,
            allow_large: false,
        }
    }
}

/// Default total size for sweeps over `NAP ∘ q` and `Mag ∘ q`.
pub const COMPOSITION_TOTAL: usize = 4;

impl Bounds {
    fn admits(&self, total: usize) -> bool {
        self.max_total.is_none_or(|m| total <= m)
    }

    fn guard(&self, estimated: u64) -> Result<()> {
        if estimated > self.cap && !self.allow_large {
            return Err(Error::BoundsTooLarge { estimated, cap: self.cap });
        }
        Ok(())
    }
}

/// Parses `s=3,t=2,r=2,total=4,cap=100000`; missing keys keep their defaults.
impl FromStr for Bounds {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut b = Bounds::default();
        for item in text.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidBounds(format!("expected key=value, found `{item}`")))?;
            let n: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidBounds(format!("`{value}` is not a number")))?;
            match key.trim() {
                "s" => b.max_s = n as usize,
                "t" => b.max_t = n as usize,
                "r" => b.max_r = n as usize,
                "total" => b.max_total = Some(n as usize),
                "cap" => b.cap = n,
                other => return Err(Error::InvalidBounds(format!("unknown key `{other}`"))),
            }
        }
        if b.max_s == 0 || b.max_t == 0 || b.max_r == 0 {
            return Err(Error::InvalidBounds("sizes must be positive".into()));
        }
        Ok(b)
    }
}

fn alphabet(base: &[&str], prefix: &str, n: usize) -> Vec<Label> {
    (0..n)
        .map(|i| match base.get(i) {
            Some(l) => Label::from(*l),
            None => Label::from(format!("{prefix}{}", i + 1).as_str()),
        })
        .collect()
}

fn s_alphabet(n: usize) -> Vec<Label> {
    alphabet(&[], "", n)
}

fn t_alphabet(n: usize) -> Vec<Label> {
    alphabet(&["a", "b", "c", "d", "e", "f", "g", "h"], "t", n)
}

fn r_alphabet(n: usize) -> Vec<Label> {
    alphabet(&["x", "y", "z"], "r", n)
}

const STAR: &str = "w";

/// Bases over every prefix of an alphabet: `out[k]` lives on the first `k` labels.
///
/// Growth is extrapolated from the last two sizes, and every basis element
/// takes part in at least `k` instances, so an oversized bound is refused
/// before its basis is materialized.
fn prefix_bases<O: Operad>(op: &O, labels: &[Label], bounds: &Bounds) -> Result<Vec<Vec<O::Elem>>> {
    let mut out: Vec<Vec<O::Elem>> = vec![Vec::new()];
    for k in 1..=labels.len() {
        if k >= 3 {
            let (a, b) = (out[k - 2].len().max(1) as u64, out[k - 1].len() as u64);
            bounds.guard((b.saturating_mul(b) / a).saturating_mul(k as u64))?;
        }
        let set: FiniteSet = labels[..k].iter().cloned().collect();
        out.push(op.basis(&set));
    }
    Ok(out)
}

fn compare<E: Ord + Clone + fmt::Display>(lhs: &LinComb<E>, rhs: &LinComb<E>, describe: impl FnOnce() -> String) -> Option<Witness> {
    (lhs != rhs).then(|| Witness {
        description: describe(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Runs `eval` over all instances in parallel and keeps the first failure.
fn sweep<I: Sync>(
    law: Law,
    subject: String,
    instances: Vec<I>,
    eval: impl Fn(&I) -> Result<Option<Witness>> + Sync,
) -> Result<LawReport> {
    let first = instances.par_iter().map(&eval).find_map_first(|r| match r {
        Ok(None) => None,
        other => Some(other),
    });
    let witness = first.transpose()?.flatten();
    Ok(LawReport {
        law,
        subject,
        instances: instances.len() as u64,
        verdict: if witness.is_some() { Verdict::Counterexample } else { Verdict::Holds },
        witness,
    })
}

/// Sizes `(k, m, n)` of `S`, `T`, `R` admitted by `bounds`, smallest first.
fn triples(bounds: &Bounds, min_s: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in min_s..=bounds.max_s {
        for m in 1..=bounds.max_t {
            for n in 1..=bounds.max_r {
                if bounds.admits(k + m + n - 2) {
                    out.push((k, m, n));
                }
            }
        }
    }
    out
}

fn pairs(bounds: &Bounds) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 1..=bounds.max_s {
        for m in 1..=bounds.max_t {
            if bounds.admits(k + m - 1) {
                out.push((k, m));
            }
        }
    }
    out
}

struct Alphabets<E> {
    s: Vec<Label>,
    t: Vec<Label>,
    sb: Vec<Vec<E>>,
    tb: Vec<Vec<E>>,
    rb: Vec<Vec<E>>,
}

fn alphabets<O: Operad>(op: &O, bounds: &Bounds, with_r: bool) -> Result<Alphabets<O::Elem>> {
    let (s, t) = (s_alphabet(bounds.max_s), t_alphabet(bounds.max_t));
    let sb = prefix_bases(op, &s, bounds)?;
    let tb = prefix_bases(op, &t, bounds)?;
    let rb = if with_r { prefix_bases(op, &r_alphabet(bounds.max_r), bounds)? } else { Vec::new() };
    Ok(Alphabets { s, t, sb, tb, rb })
}

fn product(factors: &[usize]) -> u64 {
    factors.iter().fold(1u64, |acc, &f| acc.saturating_mul(f as u64))
}

fn check_a1<O: Operad>(op: &O, bounds: &Bounds) -> Result<LawReport> {
    let a = alphabets(op, bounds, true)?;
    let sizes = triples(bounds, 2);
    bounds.guard(sizes.iter().map(|&(k, m, n)| product(&[a.sb[k].len(), k, k - 1, a.tb[m].len(), a.rb[n].len()])).sum())?;
    let mut inst = Vec::new();
    for (k, m, n) in sizes {
        for x in &a.sb[k] {
            for s in &a.s[..k] {
                for s2 in a.s[..k].iter().filter(|l| *l != s) {
                    for y in &a.tb[m] {
                        for z in &a.rb[n] {
                            inst.push((x, s, s2, y, z));
                        }
                    }
                }
            }
        }
    }
    sweep(Law::A1, op.name(), inst, |&(x, s, s2, y, z)| {
        let lhs = op.compose_lin(&op.compose(x, s, y)?, s2, &LinComb::basis(z.clone()))?;
        let rhs = op.compose_lin(&op.compose(x, s2, z)?, s, &LinComb::basis(y.clone()))?;
        Ok(compare(&lhs, &rhs, || format!("x = {x}, s = {s}, y = {y}, s' = {s2}, z = {z}")))
    })
}

fn check_a2<O: Operad>(op: &O, bounds: &Bounds) -> Result<LawReport> {
    let a = alphabets(op, bounds, true)?;
    let sizes = triples(bounds, 1);
    bounds.guard(sizes.iter().map(|&(k, m, n)| product(&[a.sb[k].len(), k, a.tb[m].len(), m, a.rb[n].len()])).sum())?;
    let mut inst = Vec::new();
    for (k, m, n) in sizes {
        for x in &a.sb[k] {
            for s in &a.s[..k] {
                for y in &a.tb[m] {
                    for t in &a.t[..m] {
                        for z in &a.rb[n] {
                            inst.push((x, s, y, t, z));
                        }
                    }
                }
            }
        }
    }
    sweep(Law::A2, op.name(), inst, |&(x, s, y, t, z)| {
        let z = LinComb::basis(z.clone());
        let lhs = op.compose_lin(&op.compose(x, s, y)?, t, &z)?;
        let rhs = op.compose_lin(&LinComb::basis(x.clone()), s, &op.compose_lin(&LinComb::basis(y.clone()), t, &z)?)?;
        Ok(compare(&lhs, &rhs, || format!("x = {x}, s = {s}, y = {y}, t = {t}, z = {}", z)))
    })
}

fn check_n1<O: Operad>(op: &O, bounds: &Bounds) -> Result<LawReport> {
    let a = alphabets(op, bounds, false)?;
    let s_target = alphabet(&[], "p", bounds.max_s);
    let t_target = alphabet(&[], "q", bounds.max_t);
    let set = |ls: &[Label]| ls.iter().cloned().collect::<FiniteSet>();
    let sigma_s: Vec<Vec<Bijection>> = (0..=bounds.max_s).map(|k| Bijection::all(&set(&a.s[..k]), &set(&s_target[..k]))).collect();
    let sigma_t: Vec<Vec<Bijection>> = (0..=bounds.max_t).map(|m| Bijection::all(&set(&a.t[..m]), &set(&t_target[..m]))).collect();
    let sizes = pairs(bounds);
    bounds.guard(
        sizes
            .iter()
            .map(|&(k, m)| product(&[a.sb[k].len(), k, a.tb[m].len(), sigma_s[k].len(), sigma_t[m].len()]))
            .sum(),
    )?;
    let mut inst = Vec::new();
    for (k, m) in sizes {
        for x in &a.sb[k] {
            for s in &a.s[..k] {
                for y in &a.tb[m] {
                    for s1 in &sigma_s[k] {
                        for s2 in &sigma_t[m] {
                            inst.push((x, s, y, s1, s2));
                        }
                    }
                }
            }
        }
    }
    sweep(Law::N1, op.name(), inst, |&(x, s, y, s1, s2)| {
        let lhs = op.compose(&op.relabel(x, s1)?, &s1.image(s)?, &op.relabel(y, s2)?)?;
        let sigma = s1.restrict(&op.ground(x).without(s))?.union(s2)?;
        let rhs = op.relabel_lin(&op.compose(x, s, y)?, &sigma)?;
        Ok(compare(&lhs, &rhs, || format!("x = {x}, s = {s}, y = {y}, σ1 = {s1:?}, σ2 = {s2:?}")))
    })
}

fn check_n2<O: Operad>(op: &O, bounds: &Bounds) -> Result<LawReport> {
    let mut pool = s_alphabet(bounds.max_s);
    pool.extend(t_alphabet(bounds.max_t));
    pool.extend(r_alphabet(bounds.max_r));
    pool.push(Label::from(STAR));
    let inst: Vec<(&Label, &Label)> = pool.iter().flat_map(|a| pool.iter().map(move |b| (a, b))).collect();
    sweep(Law::N2, op.name(), inst, |&(a, b)| {
        let sigma = Bijection::new([(a.clone(), b.clone())])?;
        let lhs = LinComb::basis(op.relabel(&op.unit(a), &sigma)?);
        let rhs = LinComb::basis(op.unit(b));
        Ok(compare(&lhs, &rhs, || format!("s1 = {a}, s2 = {b}")))
    })
}

fn check_unit<O: Operad>(law: Law, op: &O, bounds: &Bounds) -> Result<LawReport> {
    let s = s_alphabet(bounds.max_s);
    let sb = prefix_bases(op, &s, bounds)?;
    let star = Label::from(STAR);
    let mut inst = Vec::new();
    for k in (1..=bounds.max_s).filter(|&k| bounds.admits(k)) {
        for x in &sb[k] {
            for p in s[..k].iter().chain((law == Law::U1).then_some(&star)) {
                inst.push((x, p));
            }
        }
    }
    bounds.guard(inst.len() as u64)?;
    sweep(law, op.name(), inst, |&(x, p)| {
        let u = op.unit(p);
        let lhs = if law == Law::U1 { op.compose(&u, p, x)? } else { op.compose(x, p, &u)? };
        Ok(compare(&lhs, &LinComb::basis(x.clone()), || format!("x = {x}, at {p}")))
    })
}

/// Checks one of the six operad axioms exhaustively within `bounds`.
pub fn check_axiom<O: Operad>(law: Law, op: &O, bounds: &Bounds) -> Result<LawReport> {
    match law {
        Law::A1 => check_a1(op, bounds),
        Law::A2 => check_a2(op, bounds),
        Law::N1 => check_n1(op, bounds),
        Law::N2 => check_n2(op, bounds),
        Law::U1 | Law::U2 => check_unit(law, op, bounds),
        other => Err(Error::NotAnAxiom(other.to_string())),
    }
}

pub fn check_all_axioms<O: Operad>(op: &O, bounds: &Bounds) -> Result<Vec<LawReport>> {
    Law::AXIOMS.iter().map(|&law| check_axiom(law, op, bounds)).collect()
}

/// Checks `(t ∘_s u) ∘_{root u} v = φ((t ∘_s v) ∘_{root v} u)` within `bounds`.
pub fn check_eq1<O: RootedOperad>(op: &O, bounds: &Bounds) -> Result<LawReport> {
    let a = alphabets(op, bounds, true)?;
    let sizes = triples(bounds, 1);
    bounds.guard(sizes.iter().map(|&(k, m, n)| product(&[a.sb[k].len(), k, a.tb[m].len(), a.rb[n].len()])).sum())?;
    let mut inst = Vec::new();
    for (k, m, n) in sizes {
        for t in &a.sb[k] {
            for s in &a.s[..k] {
                for u in &a.tb[m] {
                    for v in &a.rb[n] {
                        inst.push((t, s, u, v));
                    }
                }
            }
        }
    }
    sweep(Law::Eq1, op.name(), inst, |&(t, s, u, v)| {
        let (lhs, rhs) = eq1_sides(op, t, s, u, v)?;
        Ok(compare(&lhs, &rhs, || format!("t = {t}, s = {s}, u = {u}, v = {v}")))
    })
}

/// Which species composition to sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompositeKind {
    /// `NAP ∘ q` with `□`.
    Box,
    /// `Mag ∘ q` with `◇`.
    Diamond,
}

impl CompositeKind {
    pub fn name(self) -> &'static str {
        match self {
            CompositeKind::Box => "box",
            CompositeKind::Diamond => "diamond",
        }
    }
}

/// Runs the axiom suite on `NAP ∘ q` or `Mag ∘ q`, after checking `q` itself.
///
/// The self-check of `q` uses the same bounds; a failure there aborts with
/// [`Error::FixtureFailed`].
pub fn check_composition_operad<Q: Operad + Clone>(kind: CompositeKind, q: &Q, bounds: &Bounds) -> Result<Vec<LawReport>> {
    if let Some(bad) = check_all_axioms(q, bounds)?.into_iter().find(|r| r.verdict != Verdict::Holds) {
        return Err(Error::FixtureFailed {
            name: q.name(),
            detail: match &bad.witness {
                Some(w) => format!("{} fails at {}", bad.law, w.description),
                None => bad.law.to_string(),
            },
        });
    }
    match kind {
        CompositeKind::Box => check_all_axioms(&NapOver(q.clone()), bounds),
        CompositeKind::Diamond => check_all_axioms(&MagOver(q.clone()), bounds),
    }
}

fn oracle_sweep<O: Operad>(op: &O, kind: OracleKind, bounds: &Bounds) -> Result<LawReport>
where
    O::Elem: Tree<Label>,
{
    let a = alphabets(op, bounds, false)?;
    let sizes = pairs(bounds);
    bounds.guard(sizes.iter().map(|&(k, m)| product(&[a.sb[k].len(), k, a.tb[m].len()])).sum())?;
    let mut inst = Vec::new();
    for (k, m) in sizes {
        for x in &a.sb[k] {
            for s in &a.s[..k] {
                for y in &a.tb[m] {
                    inst.push((x, s, y));
                }
            }
        }
    }
    let as_term = |e: &O::Elem| {
        let t = Term::from_tree(e);
        if kind.is_planar() {
            t
        } else {
            t.normalized()
        }
    };
    sweep(Law::Oracle, op.name(), inst, |&(x, s, y)| {
        let primary = op.compose(x, s, y)?.map(as_term);
        let oracle = brute_force_oracle_compose(kind, &as_term(x), s, &as_term(y))?;
        Ok(compare(&primary, &oracle, || format!("x = {x}, s = {s}, y = {y}")))
    })
}

/// Compares the primary composition of `kind` with the oracle on every
/// `(x, s, y)` with `|S| ≤ max_s` and `|T| ≤ max_t`.
pub fn check_oracle(kind: OracleKind, bounds: &Bounds) -> Result<LawReport> {
    match kind {
        OracleKind::Nap => oracle_sweep(&Nap, kind, bounds),
        OracleKind::PreLie => oracle_sweep(&PreLie, kind, bounds),
        OracleKind::Mag => oracle_sweep(&Mag, kind, bounds),
        OracleKind::ShuffleMag => oracle_sweep(&ShuffleMag, kind, bounds),
    }
}

type Binary<E> = (E, Label, E);

fn reduction_instances<O: Operad>(op: &O, bounds: &Bounds) -> Result<Vec<Binary<O::Elem>>> {
    let a = alphabets(op, bounds, false)?;
    let sizes = pairs(bounds);
    bounds.guard(sizes.iter().map(|&(k, m)| product(&[a.sb[k].len(), k, a.tb[m].len()])).sum())?;
    let mut inst = Vec::new();
    for (k, m) in sizes {
        for x in &a.sb[k] {
            for s in &a.s[..k] {
                for y in &a.tb[m] {
                    inst.push((x.clone(), s.clone(), y.clone()));
                }
            }
        }
    }
    Ok(inst)
}

/// With `q` the one-element operad and every block a singleton, `□` must
/// agree with NAP and `◇` with shuffle-Mag, term by term.
pub fn check_reduction(kind: CompositeKind, bounds: &Bounds) -> Result<LawReport> {
    let subject = format!("{}:com", kind.name());
    match kind {
        CompositeKind::Box => {
            let inst = reduction_instances(&Nap, bounds)?;
            sweep(Law::Reduction, subject, inst, |(t, s, u)| {
                let x: NapElement<_> = lift_singletons(&Com, t)?;
                let y: NapElement<_> = lift_singletons(&Com, u)?;
                let lowered = lowered(&box_compose(&Com, &x, s, &y)?, |e| lower_singletons(&Com, e).map(|p| p.to_nonplanar()));
                let direct = LinComb::basis(nap_compose(t, s, u)?);
                Ok(compare_lowered(lowered, &direct, t, s, u))
            })
        }
        CompositeKind::Diamond => {
            let inst = reduction_instances(&ShuffleMag, bounds)?;
            sweep(Law::Reduction, subject, inst, |(t, s, u)| {
                let x: MagElement<_> = lift_singletons(&Com, t)?;
                let y: MagElement<_> = lift_singletons(&Com, u)?;
                let lowered = lowered(&diamond_compose(&Com, &x, s, &y)?, |e| lower_singletons(&Com, e));
                let direct = shuffle_mag_compose(t, s, u)?;
                Ok(compare_lowered(lowered, &direct, t, s, u))
            })
        }
    }
}

/// Maps every term through `lower`, or `None` if some term has a block that is not a singleton.
fn lowered<E: Ord + Clone, B: Ord + Clone>(x: &LinComb<E>, lower: impl Fn(&E) -> Option<B>) -> Option<LinComb<B>> {
    x.iter().map(|(e, c)| lower(e).map(|b| (c.clone(), b))).collect()
}

fn compare_lowered<B: Ord + Clone + fmt::Display, E: fmt::Display>(
    lowered: Option<LinComb<B>>,
    direct: &LinComb<B>,
    t: &E,
    s: &Label,
    u: &E,
) -> Option<Witness> {
    let describe = || format!("t = {t}, s = {s}, u = {u}");
    match lowered {
        Some(l) => compare(&l, direct, describe),
        None => Some(Witness {
            description: describe(),
            lhs: "a term with a non-singleton block".into(),
            rhs: direct.to_string(),
        }),
    }
}

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// The axioms for NAP, Pre-Lie, Mag, shuffle-Mag and the one-element operad.
    Axioms,
    Eq1,
    /// The axioms for `□` and `◇` over the one-element operad, NAP and shuffle-Mag.
    Composition,
    Oracle,
    Reduction,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "axioms" => Suite::Axioms,
            "eq1" => Suite::Eq1,
            "composition" => Suite::Composition,
            "oracle" => Suite::Oracle,
            "reduction" => Suite::Reduction,
            "all" => Suite::All,
            other => return Err(Error::parse(0, format!("unknown suite `{other}`"))),
        })
    }
}

/// Runs a suite. Sweeps over compositions use `bounds.max_total`, or
/// [`COMPOSITION_TOTAL`] when it is unset.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> Result<Vec<LawReport>> {
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut out = Vec::new();
    if wants(Suite::Axioms) {
        out.extend(check_all_axioms(&Nap, bounds)?);
        out.extend(check_all_axioms(&PreLie, bounds)?);
        out.extend(check_all_axioms(&Mag, bounds)?);
        out.extend(check_all_axioms(&ShuffleMag, bounds)?);
        out.extend(check_all_axioms(&Com, bounds)?);
    }
    if wants(Suite::Eq1) {
        out.push(check_eq1(&Nap, bounds)?);
        out.push(check_eq1(&PreLie, bounds)?);
        out.push(check_eq1(&Mag, bounds)?);
        out.push(check_eq1(&ShuffleMag, bounds)?);
    }
    if wants(Suite::Composition) {
        let cb = Bounds {
            max_total: bounds.max_total.or(Some(COMPOSITION_TOTAL)),
            ..bounds.clone()
        };
        for kind in [CompositeKind::Box, CompositeKind::Diamond] {
            out.extend(check_composition_operad(kind, &Com, &cb)?);
            out.extend(check_composition_operad(kind, &Nap, &cb)?);
            out.extend(check_composition_operad(kind, &ShuffleMag, &cb)?);
        }
    }
    if wants(Suite::Oracle) {
        for kind in OracleKind::ALL {
            out.push(check_oracle(kind, bounds)?);
        }
    }
    if wants(Suite::Reduction) {
        out.push(check_reduction(CompositeKind::Box, bounds)?);
        out.push(check_reduction(CompositeKind::Diamond, bounds)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
