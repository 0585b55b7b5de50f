use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::field::FiniteField;
use super::EngineError;

/// How the words of a group are multiplied.
///
/// Every element is a byte word: a permutation of `0..degree` as its image
/// array, or a `dim x dim` matrix in row-major order with entries encoded as
/// field elements.
#[derive(Debug, Clone)]
pub enum ElementKind {
    Permutation { degree: usize },
    Matrix { dim: usize, field: Arc<FiniteField> },
}

impl ElementKind {
    pub fn word_len(&self) -> usize {
        match self {
            ElementKind::Permutation { degree } => *degree,
            ElementKind::Matrix { dim, .. } => dim * dim,
        }
    }

    pub fn identity(&self) -> Vec<u8> {
        match self {
            ElementKind::Permutation { degree } => (0..*degree).map(|x| x as u8).collect(),
            ElementKind::Matrix { dim, .. } => {
                let mut m = vec![0u8; dim * dim];
                for i in 0..*dim {
                    m[i * dim + i] = 1;
                }
                m
            }
        }
    }

    /// `out = a * b`. Permutations act on the right: `x^(ab) = (x^a)^b`.
    pub fn mul_into(&self, a: &[u8], b: &[u8], out: &mut [u8]) {
        match self {
            ElementKind::Permutation { .. } => {
                for (o, &x) in out.iter_mut().zip(a) {
                    *o = b[x as usize];
                }
            }
            ElementKind::Matrix { dim, field } => {
                let n = *dim;
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = 0u8;
                        for k in 0..n {
                            let x = a[i * n + k];
                            let y = b[k * n + j];
                            if x != 0 && y != 0 {
                                acc = field.add(acc, field.mul(x, y));
                            }
                        }
                        out[i * n + j] = acc;
                    }
                }
            }
        }
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.word_len()];
        self.mul_into(a, b, &mut out);
        out
    }

    pub fn validate(&self, word: &[u8]) -> Result<(), EngineError> {
        if word.len() != self.word_len() {
            return Err(EngineError::InconsistentGenerators(format!(
                "word of length {} for kind expecting {}",
                word.len(),
                self.word_len()
            )));
        }
        match self {
            ElementKind::Permutation { degree } => {
                let mut seen = vec![false; *degree];
                for &x in word {
                    let x = x as usize;
                    if x >= *degree || seen[x] {
                        return Err(EngineError::InconsistentGenerators(
                            "not a permutation".into(),
                        ));
                    }
                    seen[x] = true;
                }
            }
            ElementKind::Matrix { dim, field } => {
                if word.iter().any(|&x| x as u32 >= field.size()) {
                    return Err(EngineError::InconsistentGenerators(
                        "matrix entry outside the field".into(),
                    ));
                }
                if !invertible(word, *dim, field) {
                    return Err(EngineError::InconsistentGenerators(
                        "singular matrix".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// One line per word: cycle notation (1-based) or matrix rows.
    pub fn format_word(&self, word: &[u8]) -> String {
        match self {
            ElementKind::Permutation { degree } => {
                let mut seen = vec![false; *degree];
                let mut s = String::new();
                for start in 0..*degree {
                    if seen[start] || word[start] as usize == start {
                        continue;
                    }
                    s.push('(');
                    let mut x = start;
                    let mut first = true;
                    while !seen[x] {
                        seen[x] = true;
                        if !first {
                            s.push(',');
                        }
                        let _ = write!(s, "{}", x + 1);
                        first = false;
                        x = word[x] as usize;
                    }
                    s.push(')');
                }
                if s.is_empty() {
                    s.push_str("()");
                }
                s
            }
            ElementKind::Matrix { dim, .. } => {
                let rows: Vec<String> = word
                    .chunks(*dim)
                    .map(|r| {
                        r.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                format!("[{}]", rows.join("; "))
            }
        }
    }
}

fn invertible(word: &[u8], n: usize, f: &FiniteField) -> bool {
    let mut m = word.to_vec();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
            return false;
        };
        for j in 0..n {
            m.swap(col * n + j, piv * n + j);
        }
        let inv = f.inv(m[col * n + col]).unwrap();
        for r in col + 1..n {
            let factor = f.mul(m[r * n + col], inv);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let v = f.mul(factor, m[col * n + j]);
                m[r * n + j] = f.sub(m[r * n + j], v);
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
}

/// A finite group held as a full element table with its conjugacy classes.
#[derive(Debug, Clone)]
pub struct ConcreteGroup {
    kind: ElementKind,
    generators: Vec<Vec<u8>>,
    elements: Vec<Box<[u8]>>,
    index: HashMap<Box<[u8]>, u32>,
    class_of: Vec<u32>,
    classes: Vec<ConjugacyClass>,
}

pub const DEFAULT_BOUND: usize = 1 << 16;

impl ConcreteGroup {
    /// Enumerates the group generated by `generators` and its classes.
    pub fn closure(kind: ElementKind, generators: Vec<Vec<u8>>, bound: usize) -> Result<Self, EngineError> {
        for g in &generators {
            kind.validate(g)?;
        }
        let (elements, index) = enumerate(&kind, &generators, bound)?;
        let mut group = ConcreteGroup {
            kind,
            generators,
            elements,
            index,
            class_of: Vec::new(),
            classes: Vec::new(),
        };
        group.compute_classes();
        Ok(group)
    }

    /// The subgroup consisting of the listed elements of a known group.
    /// A small generating set is picked greedily.
    pub fn from_subset(kind: ElementKind, subset: &[Vec<u8>], bound: usize) -> Result<Self, EngineError> {
        if subset.len() > bound {
            return Err(EngineError::BoundExceeded { bound });
        }
        let mut gens: Vec<Vec<u8>> = Vec::new();
        let (mut elements, mut index) = enumerate(&kind, &gens, bound)?;
        for x in subset {
            if index.contains_key(x.as_slice()) {
                continue;
            }
            gens.push(x.clone());
            (elements, index) = enumerate(&kind, &gens, bound)?;
        }
        if elements.len() != subset.len() {
            return Err(EngineError::InconsistentGenerators(format!(
                "subset of size {} generates a group of order {}",
                subset.len(),
                elements.len()
            )));
        }
        let mut group = ConcreteGroup {
            kind,
            generators: gens,
            elements,
            index,
            class_of: Vec::new(),
            classes: Vec::new(),
        };
        group.compute_classes();
        Ok(group)
    }

    pub fn kind(&self) -> &ElementKind {
        &self.kind
    }

    pub fn generators(&self) -> &[Vec<u8>] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &[u8] {
        &self.elements[i]
    }

    pub fn elements(&self) -> impl Iterator<Item = &[u8]> {
        self.elements.iter().map(|e| &e[..])
    }

    pub fn index_of(&self, word: &[u8]) -> Option<usize> {
        self.index.get(word).map(|&i| i as usize)
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        self.index.contains_key(word)
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// Index of the product of two elements given by index.
    pub fn mul_index(&self, a: usize, b: usize, scratch: &mut [u8]) -> usize {
        self.kind.mul_into(&self.elements[a], &self.elements[b], scratch);
        self.index[&scratch[..]] as usize
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut scratch = vec![0u8; self.kind.word_len()];
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul_index(x, i, &mut scratch);
            k += 1;
        }
        k
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        let mut scratch = vec![0u8; self.kind.word_len()];
        let mut prev = 0;
        let mut x = i;
        while x != 0 {
            prev = x;
            x = self.mul_index(x, i, &mut scratch);
        }
        if i == 0 {
            0
        } else {
            prev
        }
    }

    /// Exponent: lcm of the orders of the class representatives.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| self.element_order(c.representative) as u64)
            .fold(1, crate::arith::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn center_order(&self) -> usize {
        self.classes.iter().filter(|c| c.size == 1).count()
    }

    /// Membership table of the subgroup generated by elements given by index.
    pub fn subgroup_members(&self, gens: &[usize]) -> Vec<bool> {
        let mut scratch = vec![0u8; self.kind.word_len()];
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            for &s in gens {
                let y = self.mul_index(list[head], s, &mut scratch);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
            head += 1;
        }
        member
    }

    /// Order of the derived subgroup: the normal closure of the commutators
    /// of generator pairs.
    pub fn derived_subgroup_order(&self) -> usize {
        let mut scratch = vec![0u8; self.kind.word_len()];
        let gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g.as_slice()] as usize)
            .collect();
        let gen_inv: Vec<usize> = gens.iter().map(|&g| self.inverse_index(g)).collect();
        let mut pending = Vec::new();
        for (a, &ga) in gens.iter().enumerate() {
            for (b, &gb) in gens.iter().enumerate() {
                // [a, b] = a^-1 b^-1 a b
                let t = self.mul_index(gen_inv[a], gen_inv[b], &mut scratch);
                let t = self.mul_index(t, ga, &mut scratch);
                pending.push(self.mul_index(t, gb, &mut scratch));
            }
        }
        let mut sub_gens: Vec<usize> = Vec::new();
        let mut member = self.subgroup_members(&sub_gens);
        while let Some(x) = pending.pop() {
            if member[x] {
                continue;
            }
            sub_gens.push(x);
            member = self.subgroup_members(&sub_gens);
            for (gi, &g) in gens.iter().enumerate() {
                let c = self.mul_index(gen_inv[gi], x, &mut scratch);
                pending.push(self.mul_index(c, g, &mut scratch));
            }
        }
        member.iter().filter(|&&m| m).count()
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut scratch = vec![0u8; self.kind.word_len()];
        let gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g.as_slice()] as usize)
            .collect();
        let gen_inv: Vec<usize> = gens.iter().map(|&g| self.inverse_index(g)).collect();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut stack = vec![start];
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for (gi, &g) in gens.iter().enumerate() {
                    let y = self.mul_index(gen_inv[gi], x, &mut scratch);
                    let y = self.mul_index(y, g, &mut scratch);
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        stack.push(y);
                    }
                }
            }
            classes.push(ConjugacyClass {
                representative: start,
                size,
            });
        }
        self.class_of = class_of;
        self.classes = classes;
    }

    /// Generators as text, one per line.
    pub fn export_generators(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            out.push_str(&self.kind.format_word(g));
            out.push('\n');
        }
        out
    }
}

type Enumeration = (Vec<Box<[u8]>>, HashMap<Box<[u8]>, u32>);

fn enumerate(kind: &ElementKind, gens: &[Vec<u8>], bound: usize) -> Result<Enumeration, EngineError> {
    let id: Box<[u8]> = kind.identity().into_boxed_slice();
    let mut elements = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0u32);
    let mut scratch = vec![0u8; kind.word_len()];
    let mut head = 0;
    while head < elements.len() {
        for g in gens {
            kind.mul_into(&elements[head], g, &mut scratch);
            if !index.contains_key(&scratch[..]) {
                if elements.len() >= bound {
                    return Err(EngineError::BoundExceeded { bound });
                }
                let word: Box<[u8]> = scratch.clone().into_boxed_slice();
                index.insert(word.clone(), elements.len() as u32);
                elements.push(word);
            }
        }
        head += 1;
    }
    Ok((elements, index))
}
