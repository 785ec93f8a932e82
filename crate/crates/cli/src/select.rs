//! Operad selectors and dispatch from a runtime name to a concrete type.

use std::fmt;
use std::str::FromStr;

use operadic::composition::{MagOver, NapOver};
use operadic::operads::{Com, Mag, Nap, Operad, PreLie, ShuffleMag, UnitOperad};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Nap,
    PreLie,
    Mag,
    ShuffleMag,
    Com,
    Unit,
}

impl Base {
    const ALL: [Base; 6] = [Base::Nap, Base::PreLie, Base::Mag, Base::ShuffleMag, Base::Com, Base::Unit];

    pub fn name(self) -> &'static str {
        match self {
            Base::Nap => "nap",
            Base::PreLie => "prelie",
            Base::Mag => "mag",
            Base::ShuffleMag => "shmag",
            Base::Com => "com",
            Base::Unit => "unit",
        }
    }
}

/// `nap | prelie | mag | shmag | com | unit | box:<base> | diamond:<base>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Plain(Base),
    Box(Base),
    Diamond(Base),
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let base = |name: &str| {
            Base::ALL.into_iter().find(|b| b.name() == name).ok_or_else(|| {
                format!("unknown operad `{name}`; expected nap, prelie, mag, shmag, com, unit, box:<q> or diamond:<q>")
            })
        };
        match s.split_once(':') {
            None => base(s).map(Selector::Plain),
            Some(("box", q)) => base(q).map(Selector::Box),
            Some(("diamond", q)) => base(q).map(Selector::Diamond),
            Some((p, _)) => Err(format!("unknown composite `{p}`; expected box or diamond")),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Plain(b) => write!(f, "{}", b.name()),
            Selector::Box(b) => write!(f, "box:{}", b.name()),
            Selector::Diamond(b) => write!(f, "diamond:{}", b.name()),
        }
    }
}

/// A computation that works for any operad.
pub trait Visit {
    type Out;
    fn visit<O: Operad + Clone>(self, op: &O) -> Self::Out;
}

fn on_base<V: Visit>(b: Base, v: V) -> V::Out {
    match b {
        Base::Nap => v.visit(&Nap),
        Base::PreLie => v.visit(&PreLie),
        Base::Mag => v.visit(&Mag),
        Base::ShuffleMag => v.visit(&ShuffleMag),
        Base::Com => v.visit(&Com),
        Base::Unit => v.visit(&UnitOperad),
    }
}

pub fn dispatch<V: Visit>(sel: Selector, v: V) -> V::Out {
    match sel {
        Selector::Plain(b) => on_base(b, v),
        Selector::Box(b) => on_base(b, Wrap { v, diamond: false }),
        Selector::Diamond(b) => on_base(b, Wrap { v, diamond: true }),
    }
}

struct Wrap<V> {
    v: V,
    diamond: bool,
}

impl<V: Visit> Visit for Wrap<V> {
    type Out = V::Out;

    fn visit<O: Operad + Clone>(self, q: &O) -> V::Out {
        if self.diamond {
            self.v.visit(&MagOver(q.clone()))
        } else {
            self.v.visit(&NapOver(q.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Name;

    impl Visit for Name {
        type Out = String;
        fn visit<O: Operad + Clone>(self, op: &O) -> String {
            op.name()
        }
    }

    #[test]
    fn selectors_reach_the_named_operad() {
        for text in ["nap", "prelie", "mag", "shmag", "com", "unit", "box:nap", "diamond:shmag", "box:com"] {
            let sel: Selector = text.parse().unwrap();
            assert_eq!(sel.to_string(), text);
            assert_eq!(dispatch(sel, Name), text);
        }
        assert!("tree".parse::<Selector>().is_err());
        assert!("box:box:nap".parse::<Selector>().is_err());
        assert!("square:nap".parse::<Selector>().is_err());
    }
}
