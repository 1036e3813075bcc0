//! Hall basis of the free nilpotent Lie ring, realized through Lyndon words:
//! the basic commutators are the standard-factorization bracketings of the
//! Lyndon words of length at most c over d letters.

use std::fmt;

/// A basic commutator: a generator or a bracket of two Hall elements,
/// shaped as the standard factorization of a Lyndon word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HallElement {
    Generator(u8),
    Bracket(Box<HallElement>, Box<HallElement>),
}

impl HallElement {
    pub fn weight(&self) -> usize {
        match self {
            HallElement::Generator(_) => 1,
            HallElement::Bracket(l, r) => l.weight() + r.weight(),
        }
    }

    /// Foliage: the generator word read off the leaves, left to right.
    pub fn word(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.weight());
        self.collect_word(&mut out);
        out
    }

    fn collect_word(&self, out: &mut Vec<u8>) {
        match self {
            HallElement::Generator(i) => out.push(*i),
            HallElement::Bracket(l, r) => {
                l.collect_word(out);
                r.collect_word(out);
            }
        }
    }
}

impl fmt::Display for HallElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HallElement::Generator(i) => write!(f, "x{}", i + 1),
            HallElement::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// Is `w` strictly smaller than every proper rotation of itself?
fn is_lyndon(w: &[u8]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    for r in 1..n {
        let rotated = w[r..].iter().chain(w[..r].iter());
        if w.iter().lt(rotated) {
            continue;
        }
        return false;
    }
    true
}

/// All Lyndon words of length <= max_len over {0, …, d-1}, in lexicographic
/// order (Duval's generation).
pub fn lyndon_words(d: u8, max_len: usize) -> Vec<Vec<u8>> {
    assert!(d >= 1 && max_len >= 1);
    let mut out = Vec::new();
    let mut w = vec![0u8];
    loop {
        out.push(w.clone());
        let k = w.len();
        while w.len() < max_len {
            let next = w[w.len() - k];
            w.push(next);
        }
        while w.last() == Some(&(d - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Split point of the standard factorization w = u·v: v is the longest
/// proper suffix of w that is itself a Lyndon word.
fn standard_split(w: &[u8]) -> usize {
    debug_assert!(w.len() >= 2);
    for i in 1..w.len() {
        if is_lyndon(&w[i..]) {
            return i;
        }
    }
    unreachable!("every Lyndon word of length >= 2 has a Lyndon proper suffix")
}

/// Bracketing of a Lyndon word along its standard factorization.
pub fn lyndon_tree(w: &[u8]) -> HallElement {
    if w.len() == 1 {
        HallElement::Generator(w[0])
    } else {
        let split = standard_split(w);
        HallElement::Bracket(
            Box::new(lyndon_tree(&w[..split])),
            Box::new(lyndon_tree(&w[split..])),
        )
    }
}

/// The Hall basis of the free Lie ring on `d` generators, truncated at
/// weight `c`, ordered by weight and then lexicographically by word.
pub fn hall_basis(d: u8, c: usize) -> Vec<HallElement> {
    let mut words = lyndon_words(d, c);
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    words.iter().map(|w| lyndon_tree(w)).collect()
}
