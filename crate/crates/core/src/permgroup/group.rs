use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use sha2::{Digest, Sha256};

use super::perm::Perm;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 400;

/// A conjugacy class of a [`Group`], headed by its minimal element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite permutation group stored by full element enumeration.
///
/// Elements are sorted lexicographically by image array, so index 0 is always the
/// identity. Multiplication, inverses, element orders, a Schreier tree over the
/// generators and the conjugacy classes are all tabulated on construction.
pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    gen_index: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<u32>,
    inv: Vec<usize>,
    orders: Vec<usize>,
    tree: Vec<(usize, usize)>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl Group {
    /// Closure of `generators` under composition, capped at [`DEFAULT_ORDER_CAP`].
    pub fn generate(generators: Vec<Perm>, degree: usize) -> Result<Group> {
        Self::generate_with_cap(generators, degree, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(generators: Vec<Perm>, degree: usize, cap: usize) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&elements[i]);
                if !seen.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    seen.insert(y.clone(), ());
                    elements.push(y);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        Ok(Self::from_elements(elements, generators))
    }

    /// Builds the group from a complete, closed element list. The caller guarantees
    /// closure and that `generators` generate it.
    pub(crate) fn from_elements(mut elements: Vec<Perm>, generators: Vec<Perm>) -> Group {
        elements.sort();
        elements.dedup();
        let degree = elements[0].degree();
        let n = elements.len();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&elements[a].compose(&elements[b])] as u32;
            }
        }
        let inv: Vec<usize> = elements.iter().map(|e| index[&e.inverse()]).collect();
        let mut orders = vec![1usize; n];
        for (a, ord) in orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = mul[a * n + x] as usize;
                *ord += 1;
            }
        }
        let gen_index: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        // Schreier tree: element = generator * predecessor.
        let mut tree = vec![(usize::MAX, usize::MAX); n];
        tree[0] = (usize::MAX, 0);
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in gen_index.iter().enumerate() {
                let y = mul[g * n + x] as usize;
                if !reached[y] {
                    reached[y] = true;
                    tree[y] = (gi, x);
                    queue.push_back(y);
                }
            }
        }
        debug_assert!(reached.iter().all(|&r| r), "generators must generate");

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n)
                .map(|g| mul[mul[g * n + a] as usize * n + inv[g]] as usize)
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(ConjClass {
                representative: members[0],
                members,
            });
        }

        Group {
            degree,
            generators,
            gen_index,
            elements,
            index,
            mul,
            inv,
            orders,
            tree,
            classes,
            class_of,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_index
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g h g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv[g])
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut x = Self::IDENTITY;
        for _ in 0..k % self.orders[a] {
            x = self.mul(a, x);
        }
        x
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |acc, &o| acc.lcm(&o))
    }

    pub fn is_p_element(&self, a: usize, p: u32) -> bool {
        let mut o = self.orders[a];
        while o % p as usize == 0 {
            o /= p as usize;
        }
        o == 1
    }

    pub fn is_p_prime_element(&self, a: usize, p: u32) -> bool {
        self.orders[a] % p as usize != 0
    }

    /// Splits `a` into commuting p- and p'-parts, returning the p'-part.
    pub fn p_prime_part(&self, a: usize, p: u32) -> usize {
        let o = self.orders[a];
        let mut pp = 1;
        while o % (pp * p as usize) == 0 {
            pp *= p as usize;
        }
        let q = o / pp;
        // exponent e with e ≡ 1 mod q and e ≡ 0 mod pp
        let e = (0..o).step_by(pp).find(|e| e % q == 1 % q).unwrap_or(0);
        self.pow(a, e)
    }

    /// Generator positions `i_1, …, i_k` with `a = g_{i_1} ⋯ g_{i_k}`.
    pub fn word(&self, a: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut x = a;
        while x != Self::IDENTITY {
            let (gi, prev) = self.tree[x];
            out.push(gi);
            x = prev;
        }
        out
    }

    /// `(i, b)` with `a = g_i * b` one step closer to the identity in the Schreier tree.
    pub fn schreier_parent(&self, a: usize) -> Option<(usize, usize)> {
        (a != Self::IDENTITY).then(|| self.tree[a])
    }

    pub fn word_string(&self, a: usize) -> String {
        let w = self.word(a);
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|g| format!("g{g}"))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn centralizer_order(&self, a: usize) -> usize {
        self.order() / self.classes[self.class_of[a]].size()
    }

    /// Indices (into [`Group::classes`]) of classes of elements of order prime to `p`.
    pub fn pprime_classes(&self, p: u32) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.is_p_prime_element(self.classes[c].representative, p))
            .collect()
    }

    /// SHA-256 over the sorted element list.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.degree as u64).to_le_bytes());
        let mut sorted: Vec<&Perm> = self.elements.iter().collect();
        sorted.sort_by(|a, b| a.images().cmp(b.images()));
        for e in sorted {
            for x in e.images() {
                h.update((x as u16).to_le_bytes());
            }
        }
        hex::encode(h.finalize())
    }
}
