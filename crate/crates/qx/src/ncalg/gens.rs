use crate::scalars::Scalar;
use rustc_hash::FxHashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    T,
    X,
    Y,
    U,
    V,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::T => 't',
            Family::X => 'x',
            Family::Y => 'y',
            Family::U => 'u',
            Family::V => 'v',
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        match s {
            "t" => Some(Family::T),
            "x" => Some(Family::X),
            "y" => Some(Family::Y),
            "u" => Some(Family::U),
            "v" => Some(Family::V),
            _ => None,
        }
    }
}

/// Orthogonal or symplectic type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    O,
    Sp,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::O => "O",
            Case::Sp => "Sp",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Case {
    type Err = String;
    fn from_str(s: &str) -> Result<Case, String> {
        match s {
            "O" | "o" => Ok(Case::O),
            "Sp" | "sp" | "SP" => Ok(Case::Sp),
            _ => Err(format!("unknown case '{}'", s)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PresKind {
    Mat,
    X(Case),
    Ext,
    MatSquare,
    XExt(Case),
}

impl PresKind {
    pub fn name(self) -> String {
        match self {
            PresKind::Mat => "MatN".into(),
            PresKind::X(c) => format!("X-{}-N", c),
            PresKind::Ext => "ExtN".into(),
            PresKind::MatSquare => "MatN-TensorSquare".into(),
            PresKind::XExt(c) => format!("X-{}-with-Ext", c),
        }
    }
}

/// A generator; `j` is unused (0) for the `y` family. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub fam: Family,
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(fam: Family, i: usize, j: usize) -> Gen {
        Gen { fam, i: i as u8, j: j as u8 }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fam == Family::Y {
            write!(f, "y[{}]", self.i)
        } else {
            write!(f, "{}[{},{}]", self.fam.letter(), self.i, self.j)
        }
    }
}

/// Generator alphabet of a presentation, with the x-family symmetry rules.
#[derive(Clone, Debug)]
pub struct Alphabet {
    pub kind: PresKind,
    pub n: usize,
    pub gens: Vec<Gen>,
    pub index: FxHashMap<Gen, u8>,
}

impl Alphabet {
    pub fn new(kind: PresKind, n: usize) -> Alphabet {
        let mut gens = Vec::new();
        let square = |fam: Family, gens: &mut Vec<Gen>| {
            for i in 1..=n {
                for j in 1..=n {
                    gens.push(Gen::new(fam, i, j));
                }
            }
        };
        let xs = |case: Case, gens: &mut Vec<Gen>| {
            for i in 1..=n {
                for j in i..=n {
                    if case == Case::Sp && i == j {
                        continue;
                    }
                    gens.push(Gen::new(Family::X, i, j));
                }
            }
        };
        let ys = |gens: &mut Vec<Gen>| {
            for i in 1..=n {
                gens.push(Gen::new(Family::Y, i, 0));
            }
        };
        match kind {
            PresKind::Mat => square(Family::T, &mut gens),
            PresKind::X(c) => xs(c, &mut gens),
            PresKind::Ext => ys(&mut gens),
            PresKind::MatSquare => {
                square(Family::U, &mut gens);
                square(Family::V, &mut gens);
            }
            PresKind::XExt(c) => {
                xs(c, &mut gens);
                ys(&mut gens);
            }
        }
        assert!(gens.len() < 256, "alphabet too large");
        let index = gens.iter().enumerate().map(|(k, g)| (*g, k as u8)).collect();
        Alphabet { kind, n, gens, index }
    }

    pub fn case(&self) -> Option<Case> {
        match self.kind {
            PresKind::X(c) | PresKind::XExt(c) => Some(c),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Resolves a possibly non-canonical generator to `coefficient * canonical`,
    /// or `None` when it vanishes.
    pub fn canon(&self, fam: Family, i: usize, j: usize) -> Result<Option<(Scalar, u8)>, String> {
        let n = self.n;
        let out_of_range = |v: usize| v == 0 || v > n;
        if out_of_range(i) || (fam != Family::Y && out_of_range(j)) {
            return Err(format!("index out of range for N = {}", n));
        }
        if fam == Family::X {
            let case = self.case().ok_or_else(|| "x is not a generator here".to_string())?;
            let (c, a, b) = match case {
                Case::O if i > j => (Scalar::qpow(-1), j, i),
                Case::O => (Scalar::one(), i, j),
                Case::Sp if i == j => return Ok(None),
                Case::Sp if i > j => (Scalar::mqpow(1), j, i),
                Case::Sp => (Scalar::one(), i, j),
            };
            let g = Gen::new(fam, a, b);
            return Ok(Some((c, self.index[&g])));
        }
        let g = if fam == Family::Y { Gen::new(fam, i, 0) } else { Gen::new(fam, i, j) };
        match self.index.get(&g) {
            Some(k) => Ok(Some((Scalar::one(), *k))),
            None => Err(format!("{} is not a generator here", fam.letter())),
        }
    }

    /// Whether `a b` (adjacent, in that order) is a normal-form pair.
    pub fn basis_pair(&self, a: u8, b: u8) -> bool {
        a < b || (a == b && self.gens[a as usize].fam != Family::Y)
    }
}
