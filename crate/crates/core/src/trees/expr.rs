use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::foundations::{FiniteSet, Label};
use crate::text::Cursor;
use crate::trees::{PlanarRootedTree, RootedTree};

/// Parsed form of `EXPR := LABEL | LABEL '(' EXPR (',' EXPR)* ')'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeExpr {
    pub label: Label,
    pub children: Vec<TreeExpr>,
}

impl TreeExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let out = Self::parse_node(&mut cur)?;
        cur.finish()?;
        out.check_distinct()?;
        Ok(out)
    }

    fn parse_node(cur: &mut Cursor<'_>) -> Result<Self> {
        let label = cur.label()?;
        let mut children = Vec::new();
        if cur.eat('(') {
            loop {
                children.push(Self::parse_node(cur)?);
                if cur.eat(')') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        Ok(TreeExpr { label, children })
    }

    fn check_distinct(&self) -> Result<()> {
        let mut seen = FiniteSet::empty();
        let mut stack = vec![self];
        while let Some(n) = stack.pop() {
            if !seen.insert(n.label.clone()) {
                return Err(Error::DuplicateLabel(n.label.to_string()));
            }
            stack.extend(n.children.iter());
        }
        Ok(())
    }

    fn collect(&self, children: &mut BTreeMap<Label, Vec<Label>>) {
        children.insert(self.label.clone(), self.children.iter().map(|c| c.label.clone()).collect());
        for c in &self.children {
            c.collect(children);
        }
    }

    pub fn to_planar(&self) -> PlanarRootedTree {
        let mut children = BTreeMap::new();
        self.collect(&mut children);
        PlanarRootedTree::from_parts_unchecked(self.label.clone(), children)
    }
}

/// Parses a planar tree; child order is kept.
pub fn parse_planar_tree(text: &str) -> Result<PlanarRootedTree> {
    Ok(TreeExpr::parse(text)?.to_planar())
}

/// Parses a non-planar tree; child order is normalized away.
pub fn parse_rooted_tree(text: &str) -> Result<RootedTree> {
    Ok(TreeExpr::parse(text)?.to_planar().to_nonplanar())
}

impl FromStr for PlanarRootedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_planar_tree(s)
    }
}

impl FromStr for RootedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rooted_tree(s)
    }
}

pub(crate) fn write_expr<V: Ord>(
    f: &mut fmt::Formatter<'_>,
    v: &V,
    children: &BTreeMap<V, Vec<V>>,
    name: &dyn Fn(&V) -> String,
) -> fmt::Result {
    f.write_str(&name(v))?;
    let kids = children.get(v).map_or(&[][..], Vec::as_slice);
    if !kids.is_empty() {
        f.write_str("(")?;
        for (i, c) in kids.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_expr(f, c, children, name)?;
        }
        f.write_str(")")?;
    }
    Ok(())
}

/// Renders a tree expression with custom vertex names.
pub(crate) fn expr_string<V: Ord>(root: &V, children: &BTreeMap<V, Vec<V>>, name: &dyn Fn(&V) -> String) -> String {
    struct Show<'a, V: Ord>(&'a V, &'a BTreeMap<V, Vec<V>>, &'a dyn Fn(&V) -> String);
    impl<V: Ord> fmt::Display for Show<'_, V> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_expr(f, self.0, self.1, self.2)
        }
    }
    Show(root, children, name).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_instances() {
        let t = parse_planar_tree("1(a(3,4,b(c)))").unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.root().as_str(), "1");
        assert_eq!(parse_planar_tree("s").unwrap().len(), 1);
        assert_eq!(parse_planar_tree(" 1 ( 2 , 3 ) ").unwrap().to_string(), "1(2,3)");
    }

    #[test]
    fn nonplanar_parse_canonicalizes() {
        assert_eq!(parse_rooted_tree("1(2(3,4))").unwrap(), parse_rooted_tree("1(2(4,3))").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_planar_tree("1(2,") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_planar_tree("1(2))"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_planar_tree("1()"), Err(Error::Parse { .. })));
        assert_eq!(parse_planar_tree("1(2,1)"), Err(Error::DuplicateLabel("1".into())));
    }
}
