//! Named constructors and the textual group-spec parser used by the CLI.

use super::group::{Group, DEFAULT_ORDER_CAP};
use super::perm::Perm;
use crate::error::{Error, Result};

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Perm {
    let points: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &x) in points.iter().enumerate() {
        images[x] = points[(i + 1) % points.len()];
    }
    Perm::from_images(images).expect("cycle")
}

fn gens_cyclic(n: usize) -> (Vec<Perm>, usize) {
    if n <= 1 {
        (vec![], 1)
    } else {
        (vec![cycle(0..n, n)], n)
    }
}

fn gens_dihedral(order: usize) -> Result<(Vec<Perm>, usize)> {
    if order % 2 != 0 || order == 0 {
        return Err(Error::Parse(format!(
            "dihedral order must be even, got {order}"
        )));
    }
    let k = order / 2;
    Ok(match k {
        1 => gens_cyclic(2),
        2 => gens_klein4(),
        _ => {
            let reflection =
                Perm::from_images((0..k).map(|x| (k - x) % k).collect()).expect("reflection");
            (vec![cycle(0..k, k), reflection], k)
        }
    })
}

fn gens_symmetric(n: usize) -> (Vec<Perm>, usize) {
    match n {
        0 | 1 => (vec![], 1),
        2 => (vec![cycle(0..2, 2)], 2),
        _ => (vec![cycle([0, 1], n), cycle(0..n, n)], n),
    }
}

fn gens_alternating(n: usize) -> (Vec<Perm>, usize) {
    if n < 3 {
        return (vec![], n.max(1));
    }
    ((0..n - 2).map(|i| cycle(i..i + 3, n)).collect(), n)
}

fn gens_klein4() -> (Vec<Perm>, usize) {
    (
        vec![
            Perm::parse_cycles("(0 1)(2 3)", 4).unwrap(),
            Perm::parse_cycles("(0 2)(1 3)", 4).unwrap(),
        ],
        4,
    )
}

fn gens_quaternion8() -> (Vec<Perm>, usize) {
    // left-regular representation
    (
        vec![
            Perm::parse_cycles("(0 1 2 3)(4 5 6 7)", 8).unwrap(),
            Perm::parse_cycles("(0 4 2 6)(1 7 3 5)", 8).unwrap(),
        ],
        8,
    )
}

fn product_gens(factors: Vec<(Vec<Perm>, usize)>) -> (Vec<Perm>, usize) {
    let degree: usize = factors.iter().map(|(_, d)| d).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for (fg, d) in factors {
        gens.extend(fg.iter().map(|g| g.shifted(offset, degree)));
        offset += d;
    }
    (gens, degree.max(1))
}

pub fn cyclic(n: usize) -> Result<Group> {
    let (g, d) = gens_cyclic(n);
    Group::generate(g, d)
}

/// Dihedral group of the given order (so `dihedral(8)` is the symmetry group of a square).
pub fn dihedral(order: usize) -> Result<Group> {
    let (g, d) = gens_dihedral(order)?;
    Group::generate(g, d)
}

pub fn symmetric(n: usize) -> Result<Group> {
    let (g, d) = gens_symmetric(n);
    Group::generate(g, d)
}

pub fn alternating(n: usize) -> Result<Group> {
    let (g, d) = gens_alternating(n);
    Group::generate(g, d)
}

pub fn klein4() -> Result<Group> {
    let (g, d) = gens_klein4();
    Group::generate(g, d)
}

pub fn quaternion8() -> Result<Group> {
    let (g, d) = gens_quaternion8();
    Group::generate(g, d)
}

pub fn elementary_abelian(p: usize, k: usize) -> Result<Group> {
    let (g, d) = product_gens((0..k).map(|_| gens_cyclic(p)).collect());
    Group::generate(g, d)
}

fn parse_usize(tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse(format!("{what} needs an integer argument")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer argument to {what}")))
}

fn parse_factor(text: &str) -> Result<(Vec<Perm>, usize)> {
    let mut toks = text.split_whitespace();
    let head = toks
        .next()
        .ok_or_else(|| Error::Parse("empty group factor".into()))?
        .to_ascii_lowercase();
    let short =
        |prefix: char| -> Option<usize> { head.strip_prefix(prefix).and_then(|r| r.parse().ok()) };
    let out = match head.as_str() {
        "trivial" => gens_cyclic(1),
        "cyclic" => gens_cyclic(parse_usize(toks.next(), "cyclic")?),
        "dihedral" => gens_dihedral(parse_usize(toks.next(), "dihedral")?)?,
        "symmetric" => gens_symmetric(parse_usize(toks.next(), "symmetric")?),
        "alternating" => gens_alternating(parse_usize(toks.next(), "alternating")?),
        "klein4" | "v4" => gens_klein4(),
        "quaternion8" | "q8" => gens_quaternion8(),
        "elementary_abelian" => {
            let p = parse_usize(toks.next(), "elementary_abelian")?;
            let k = parse_usize(toks.next(), "elementary_abelian")?;
            product_gens((0..k).map(|_| gens_cyclic(p)).collect())
        }
        _ => {
            if let Some(n) = short('c') {
                gens_cyclic(n)
            } else if let Some(n) = short('d') {
                gens_dihedral(n)?
            } else if let Some(n) = short('s') {
                gens_symmetric(n)
            } else if let Some(n) = short('a') {
                gens_alternating(n)
            } else {
                return Err(Error::Parse(format!("unknown group {text:?}")));
            }
        }
    };
    if toks.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens in {text:?}")));
    }
    Ok(out)
}

/// Parses a group description.
///
/// Accepted forms: a named group (`"cyclic 3"`, `"dihedral 8"`, `"symmetric 4"`,
/// `"alternating 4"`, `"quaternion8"`, `"klein4"`, `"elementary_abelian 3 2"`, or the
/// short names `C3`, `D8`, `S4`, `A4`, `Q8`, `V4`), a direct product of those joined
/// by ` x ` (`"C3 x C3"`), or a comma-separated list of generators in cycle notation
/// (`"(0 1), (0 1 2)"`).
pub fn parse_group(spec: &str, cap: usize) -> Result<Group> {
    let spec = spec.trim();
    if spec.starts_with('(') {
        let degree = Perm::cycle_string_degree(spec);
        let gens = spec
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| Perm::parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()
            .or_else(|_| {
                // commas may also separate points inside a cycle
                split_top_level(spec)
                    .iter()
                    .map(|s| Perm::parse_cycles(s, degree))
                    .collect::<Result<Vec<_>>>()
            })?;
        return Group::generate_with_cap(gens, degree, cap);
    }
    let factors = spec
        .split(['x', '×'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_factor)
        .collect::<Result<Vec<_>>>()?;
    if factors.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let (gens, degree) = if factors.len() == 1 {
        factors.into_iter().next().unwrap()
    } else {
        product_gens(factors)
    };
    Group::generate_with_cap(gens, degree, cap)
}

/// Splits `"(0,1),(0,1,2)"` on commas outside parentheses.
fn split_top_level(spec: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in spec.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

pub fn parse_group_default(spec: &str) -> Result<Group> {
    parse_group(spec, DEFAULT_ORDER_CAP)
}
