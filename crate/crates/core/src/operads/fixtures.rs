use std::fmt;

use crate::dot::ToDot;
use crate::error::{Error, Result};
use crate::foundations::{Bijection, FiniteSet, Label, LinComb};
use crate::operads::Operad;
use crate::text::Cursor;

/// The single basis element of a one-dimensional component, written `e{1,2}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corolla(pub FiniteSet);

impl fmt::Display for Corolla {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Debug for Corolla {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl ToDot for Corolla {
    fn to_dot(&self, name: &str, caption: &str) -> String {
        format!("digraph \"{name}\" {{\n  label=\"{caption}\";\n  n0 [label=\"{self}\"];\n}}\n")
    }
}

fn parse_corolla(text: &str) -> Result<Corolla> {
    let mut cur = Cursor::new(text);
    cur.expect('e')?;
    let labels = cur.label_list('{', '}')?;
    cur.finish()?;
    Ok(Corolla(FiniteSet::try_from_labels(labels)?))
}

/// The commutative one-element operad: `q[S]` is spanned by a single
/// element for every nonempty `S`, and compositions are forced.
#[derive(Clone, Copy, Debug, Default)]
pub struct Com;

impl Operad for Com {
    type Elem = Corolla;

    fn name(&self) -> String {
        "com".into()
    }

    fn basis(&self, labels: &FiniteSet) -> Vec<Corolla> {
        if labels.is_empty() {
            Vec::new()
        } else {
            vec![Corolla(labels.clone())]
        }
    }

    fn ground(&self, x: &Corolla) -> FiniteSet {
        x.0.clone()
    }

    fn compose(&self, x: &Corolla, s: &Label, y: &Corolla) -> Result<LinComb<Corolla>> {
        Ok(LinComb::basis(Corolla(x.0.glue(s, &y.0)?)))
    }

    fn relabel(&self, x: &Corolla, sigma: &Bijection) -> Result<Corolla> {
        sigma.require_domain(&x.0)?;
        Ok(Corolla(sigma.image_set(&x.0)?))
    }

    fn unit(&self, s: &Label) -> Corolla {
        Corolla(FiniteSet::singleton(s.clone()))
    }

    fn parse_elem(&self, text: &str) -> Result<Corolla> {
        let c = parse_corolla(text)?;
        if c.0.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(c)
    }
}

/// The unit operad: only singletons carry a (one-dimensional) component.
#[derive(Clone, Copy, Debug, Default)]
pub struct UnitOperad;

impl Operad for UnitOperad {
    type Elem = Corolla;

    fn name(&self) -> String {
        "unit".into()
    }

    fn basis(&self, labels: &FiniteSet) -> Vec<Corolla> {
        if labels.len() == 1 {
            vec![Corolla(labels.clone())]
        } else {
            Vec::new()
        }
    }

    fn ground(&self, x: &Corolla) -> FiniteSet {
        x.0.clone()
    }

    fn compose(&self, x: &Corolla, s: &Label, y: &Corolla) -> Result<LinComb<Corolla>> {
        Ok(LinComb::basis(Corolla(x.0.glue(s, &y.0)?)))
    }

    fn relabel(&self, x: &Corolla, sigma: &Bijection) -> Result<Corolla> {
        Com.relabel(x, sigma)
    }

    fn unit(&self, s: &Label) -> Corolla {
        Com.unit(s)
    }

    fn parse_elem(&self, text: &str) -> Result<Corolla> {
        let c = parse_corolla(text)?;
        if c.0.len() != 1 {
            return Err(Error::InvalidElement(format!("{c} is not in a singleton component")));
        }
        Ok(c)
    }
}
