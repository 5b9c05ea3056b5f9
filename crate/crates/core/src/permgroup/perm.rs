use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}` stored by its image array.
///
/// Products compose right to left: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Parses cycle notation such as `"(0 1)(2 3)"`; `"()"` or `""` is the identity.
    ///
    /// Points may be separated by spaces or commas.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut rest = text.trim();
        let mut seen = vec![false; degree];
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {text:?}")))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let points = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            for (i, &x) in points.iter().enumerate() {
                if x >= degree {
                    return Err(Error::Parse(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if seen[x] {
                    return Err(Error::Parse(format!("point {x} repeated in {text:?}")));
                }
                seen[x] = true;
                images[x] = points[(i + 1) % points.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Largest point mentioned in a cycle string, plus one.
    pub fn cycle_string_degree(text: &str) -> usize {
        text.split(|c: char| !c.is_ascii_digit())
            .filter_map(|s| s.parse::<usize>().ok())
            .map(|x| x + 1)
            .max()
            .unwrap_or(1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Perm { images }
    }

    /// Embeds into a larger degree, shifting all points by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u16;
        }
        Perm { images }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let p = Perm::parse_cycles("(0 1)(2 3)", 4).unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3)");
        assert_eq!(p.compose(&p), Perm::identity(4));
        let q = Perm::parse_cycles("(0,1,2)", 3).unwrap();
        assert_eq!(q.apply(0), 1);
        assert_eq!(q.apply(2), 0);
        assert_eq!(q.inverse().apply(0), 2);
        assert!(Perm::parse_cycles("()", 2).unwrap().is_identity());
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        // (a∘b)(1) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn malformed_cycles_are_rejected() {
        assert!(Perm::parse_cycles("(0 1", 2).is_err());
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
        assert!(Perm::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Perm::parse_cycles("0 1", 3).is_err());
        assert!(Perm::parse_cycles("(a b)", 3).is_err());
    }
}
