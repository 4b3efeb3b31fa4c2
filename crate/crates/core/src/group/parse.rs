use std::sync::Arc;

use super::{
    build_abelian, build_cyclic, build_gl2, build_hypercube, build_sl2, build_symmetric,
    build_wreath_invariant, circulant_module, coordinate_module, natural_module_symmetric,
    natural_module_wreath, paley_module, standard_module_cyclic, GroupData, LinearModule,
    ModuleChar,
};
use crate::error::{Error, Result};

/// A parsed group specification, e.g. `Z4xZ2`, `S5`, `Z3wrS2`, `SL2(5)@steinberg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `Zr` with `V = G_1 + G_{r-1}`.
    Cyclic(u32),
    /// `Zr1xZr2x...` with the coordinate module.
    Abelian(Vec<u32>),
    Symmetric(u32),
    Wreath { r: u32, n: u32 },
    Gl2 { q: u32, steinberg: bool },
    Sl2 { q: u32, steinberg: bool },
    Paley(u32),
    Circulant { r: u32, connection: Vec<u32> },
    Hypercube(u32),
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            len: src.len(),
            _src: src,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: msg.into(),
        })
    }

    fn eat(&mut self, kw: &str) -> bool {
        let n = kw.chars().count();
        let matches = self.pos + n <= self.chars.len()
            && self.chars[self.pos..self.pos + n]
                .iter()
                .map(|&(_, c)| c)
                .eq(kw.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, kw: &str) -> Result<()> {
        if self.eat(kw) {
            Ok(())
        } else {
            self.err(format!("expected '{kw}'"))
        }
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn done(&self) -> bool {
        self.pos == self.chars.len()
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut c = Cursor::new(text);
    if c.done() {
        return c.err("empty group specification");
    }
    let spec = if c.eat("GL2(") {
        let q = c.int()?;
        c.expect(")")?;
        GroupSpec::Gl2 { q, steinberg: false }
    } else if c.eat("SL2(") {
        let q = c.int()?;
        c.expect(")")?;
        GroupSpec::Sl2 { q, steinberg: false }
    } else if c.eat("paley(") {
        let p = c.int()?;
        c.expect(")")?;
        GroupSpec::Paley(p)
    } else if c.eat("hypercube(") {
        let n = c.int()?;
        c.expect(")")?;
        GroupSpec::Hypercube(n)
    } else if c.eat("circulant(") {
        let r = c.int()?;
        c.expect(";")?;
        let mut connection = vec![c.int()?];
        while c.eat(",") {
            connection.push(c.int()?);
        }
        c.expect(")")?;
        GroupSpec::Circulant { r, connection }
    } else if c.eat("Z") {
        let r = c.int()?;
        if c.eat("wr") {
            c.expect("S")?;
            let n = c.int()?;
            GroupSpec::Wreath { r, n }
        } else if c.eat("x") {
            let mut radii = vec![r];
            loop {
                c.expect("Z")?;
                radii.push(c.int()?);
                if !c.eat("x") {
                    break;
                }
            }
            GroupSpec::Abelian(radii)
        } else {
            GroupSpec::Cyclic(r)
        }
    } else if c.eat("S") {
        GroupSpec::Symmetric(c.int()?)
    } else {
        return c.err("unknown group; expected Z, S, GL2, SL2, paley, circulant or hypercube");
    };
    let spec = if c.eat("@") {
        if !c.eat("steinberg") {
            return c.err("unknown module suffix; only '@steinberg' is recognised");
        }
        match spec {
            GroupSpec::Gl2 { q, .. } => GroupSpec::Gl2 { q, steinberg: true },
            GroupSpec::Sl2 { q, .. } => GroupSpec::Sl2 { q, steinberg: true },
            _ => return c.err("'@steinberg' applies only to GL2(q) and SL2(q)"),
        }
    } else {
        spec
    };
    if !c.done() {
        return c.err("unexpected trailing input");
    }
    Ok(spec)
}

impl GroupSpec {
    /// Builds the group and its default module.
    pub fn build(&self) -> Result<(Arc<GroupData>, ModuleChar)> {
        match self {
            GroupSpec::Cyclic(r) => {
                let g = build_cyclic(*r)?;
                let v = standard_module_cyclic(&g)?;
                Ok((g, v))
            }
            GroupSpec::Abelian(radii) => {
                let g = build_abelian(radii)?;
                let v = coordinate_module(&g)?;
                Ok((g, v))
            }
            GroupSpec::Hypercube(n) => {
                let g = build_hypercube(*n)?;
                let v = coordinate_module(&g)?;
                Ok((g, v))
            }
            GroupSpec::Symmetric(n) => {
                let g = build_symmetric(*n)?;
                let v = natural_module_symmetric(&g)?;
                Ok((g, v))
            }
            GroupSpec::Wreath { r, n } => {
                let g = build_wreath_invariant(*r, *n)?;
                let v = natural_module_wreath(&g)?;
                Ok((g, v))
            }
            GroupSpec::Gl2 { q, steinberg } => {
                let g = build_gl2(*q)?;
                let v = linear_module(*steinberg).character(&g)?;
                Ok((g, v))
            }
            GroupSpec::Sl2 { q, steinberg } => {
                let g = build_sl2(*q)?;
                let v = linear_module(*steinberg).character(&g)?;
                Ok((g, v))
            }
            GroupSpec::Paley(p) => paley_module(*p),
            GroupSpec::Circulant { r, connection } => {
                let g = build_cyclic(*r)?;
                let v = circulant_module(&g, connection)?;
                Ok((g, v))
            }
        }
    }

    /// The same spec with the Steinberg module selected, for GL2/SL2 only.
    pub fn with_steinberg(&self) -> Result<GroupSpec> {
        match *self {
            GroupSpec::Gl2 { q, .. } => Ok(GroupSpec::Gl2 { q, steinberg: true }),
            GroupSpec::Sl2 { q, .. } => Ok(GroupSpec::Sl2 { q, steinberg: true }),
            _ => Err(Error::unsupported(
                "the Steinberg module exists only for GL2(q) and SL2(q)",
            )),
        }
    }

    /// Radii of the product of cyclic groups, when the spec is abelian.
    pub fn radii(&self) -> Option<Vec<u32>> {
        match self {
            GroupSpec::Cyclic(r) => Some(vec![*r]),
            GroupSpec::Abelian(radii) => Some(radii.clone()),
            GroupSpec::Hypercube(n) => Some(vec![2; *n as usize]),
            _ => None,
        }
    }
}

fn linear_module(steinberg: bool) -> LinearModule {
    if steinberg {
        LinearModule::Steinberg
    } else {
        LinearModule::Induced
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_spec("Z10").unwrap(), GroupSpec::Cyclic(10));
        assert_eq!(parse_spec(" Z4 x Z2 ").unwrap(), GroupSpec::Abelian(vec![4, 2]));
        assert_eq!(parse_spec("S4").unwrap(), GroupSpec::Symmetric(4));
        assert_eq!(parse_spec("Z3wrS2").unwrap(), GroupSpec::Wreath { r: 3, n: 2 });
        assert_eq!(
            parse_spec("SL2(5)@steinberg").unwrap(),
            GroupSpec::Sl2 { q: 5, steinberg: true }
        );
        assert_eq!(
            parse_spec("circulant(8; 1, 3)").unwrap(),
            GroupSpec::Circulant { r: 8, connection: vec![1, 3] }
        );
        assert_eq!(parse_spec("paley(13)").unwrap(), GroupSpec::Paley(13));
        assert_eq!(parse_spec("hypercube(3)").unwrap(), GroupSpec::Hypercube(3));
    }

    #[test]
    fn error_offsets() {
        let e = parse_spec("Z4xQ2").unwrap_err();
        assert_eq!(e, Error::Parse { offset: 3, message: "expected 'Z'".into() });
        match parse_spec("S4@steinberg").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 12),
            e => panic!("{e:?}"),
        }
        match parse_spec("GL2(3) junk").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 7),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_spec("   "), Err(Error::Parse { .. })));
    }

    #[test]
    fn builds() {
        for s in ["Z10", "Z4xZ2", "S4", "Z2wrS3", "GL2(3)", "SL2(3)@steinberg", "paley(13)", "circulant(6;1,2)", "hypercube(3)"] {
            let (g, v) = parse_spec(s).unwrap().build().unwrap();
            g.validate().unwrap();
            assert_eq!(v.values.len(), g.classes.len());
        }
    }
}
