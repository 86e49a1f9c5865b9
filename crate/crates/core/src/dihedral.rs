//! Left-greedy Garside normal form in the dihedral Artin group
//! `<a, b | aba... = bab...>` with relations of length `m`.
//!
//! Every element is written uniquely as `Δ^p x_1 ... x_r` where `Δ` is the
//! alternating word of length `m`, `p` is any integer and the `x_i` are
//! proper, non-trivial prefixes of `Δ` (alternating words of length
//! `1..m`) such that the last letter of `x_i` is the first letter of
//! `x_{i+1}`. Conjugation by `Δ` swaps `a` and `b` when `m` is odd and is
//! trivial when `m` is even; it is used to keep every power of `Δ` on the left.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Label;
use crate::word::{alternating, Letter, Side, Word};

/// Proper simple element: the alternating word of length `len` (`1 <= len < m`)
/// starting with generator slot `first` (0 or 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simple {
    pub first: u8,
    pub len: u32,
}

impl Simple {
    pub fn last(self) -> u8 {
        if self.len % 2 == 1 {
            self.first
        } else {
            1 - self.first
        }
    }

    fn twisted(self, m: u32) -> Simple {
        if m % 2 == 1 {
            Simple { first: 1 - self.first, len: self.len }
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DihedralNF {
    m: u32,
    gens: [usize; 2],
    power: i64,
    factors: Vec<Simple>,
}

impl DihedralNF {
    /// Identity element of the dihedral group on generators `x`, `y` (stored
    /// in increasing order) with relation length `m`.
    pub fn identity(m: u32, x: usize, y: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadLabel(m as u64));
        }
        if x == y {
            return Err(Error::SelfPair(x.to_string()));
        }
        Ok(DihedralNF { m, gens: [x.min(y), x.max(y)], power: 0, factors: Vec::new() })
    }

    /// Normal form of `word`, whose letters must be `x` or `y`.
    pub fn from_word(m: u32, x: usize, y: usize, word: &Word) -> Result<Self> {
        let mut nf = Self::identity(m, x, y)?;
        nf.mul_word(word)?;
        Ok(nf)
    }

    /// Same as [`DihedralNF::from_word`] with the label type of the graph.
    pub fn from_word_label(label: Label, x: usize, y: usize, word: &Word) -> Result<Self> {
        match label {
            Label::Finite(m) => Self::from_word(m, x, y, word),
            Label::Infinity => Err(Error::NotInScope("dihedral normal forms need a finite label".into())),
        }
    }

    /// Builds a normal form from its parts, rejecting factor sequences that are
    /// not proper simples or not left-weighted.
    pub fn from_parts(m: u32, x: usize, y: usize, power: i64, factors: Vec<Simple>) -> Option<Self> {
        let mut nf = Self::identity(m, x, y).ok()?;
        let proper = factors.iter().all(|s| s.first < 2 && s.len >= 1 && s.len < m);
        let weighted = factors.windows(2).all(|w| w[0].last() == w[1].first);
        if !proper || !weighted {
            return None;
        }
        nf.power = power;
        nf.factors = factors;
        Some(nf)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn generators(&self) -> [usize; 2] {
        self.gens
    }

    /// Exponent of `Δ`.
    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    /// Number of non-`Δ` factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    fn slot(&self, g: usize) -> Result<u8> {
        if g == self.gens[0] {
            Ok(0)
        } else if g == self.gens[1] {
            Ok(1)
        } else {
            Err(Error::UnknownGenerator(g.to_string()))
        }
    }

    fn twist_all(&mut self) {
        let m = self.m;
        for s in &mut self.factors {
            *s = s.twisted(m);
        }
    }

    /// Right multiplication by a positive generator slot.
    fn mul_atom(&mut self, x: u8) {
        match self.factors.last_mut() {
            Some(s) if s.last() != x => {
                s.len += 1;
                if s.len == self.m {
                    self.factors.pop();
                    // s_1 ... s_{r-1} Δ = Δ τ(s_1) ... τ(s_{r-1})
                    self.twist_all();
                    self.power += 1;
                }
            }
            _ => self.factors.push(Simple { first: x, len: 1 }),
        }
    }

    /// Right multiplication by the inverse of a generator slot, using
    /// `x^-1 = u Δ^-1` with `u` the alternating word of length `m - 1`
    /// that starts with the other generator.
    fn mul_inverse_atom(&mut self, x: u8) {
        let first = 1 - x;
        for i in 0..self.m - 1 {
            self.mul_atom(if i % 2 == 0 { first } else { 1 - first });
        }
        self.twist_all();
        self.power -= 1;
    }

    pub fn mul_letter(&mut self, letter: Letter) -> Result<()> {
        let x = self.slot(letter.generator)?;
        if letter.inverse {
            self.mul_inverse_atom(x);
        } else {
            self.mul_atom(x);
        }
        Ok(())
    }

    pub fn mul_word(&mut self, word: &Word) -> Result<()> {
        for &l in word.letters() {
            self.mul_letter(l)?;
        }
        Ok(())
    }

    /// The Garside element `Δ` as a word.
    pub fn delta_word(&self) -> Word {
        let [a, b] = self.gens;
        alternating(&Word::generator(a), &Word::generator(b), self.m as usize, Side::Left)
    }

    pub fn simple_word(&self, s: Simple) -> Word {
        let x = Word::generator(self.gens[s.first as usize]);
        let y = Word::generator(self.gens[1 - s.first as usize]);
        alternating(&x, &y, s.len as usize, Side::Left)
    }

    /// The factors as words.
    pub fn factor_words(&self) -> Vec<Word> {
        self.factors.iter().map(|&s| self.simple_word(s)).collect()
    }

    /// A word representing the element: `Δ^p` followed by the factors.
    pub fn to_word(&self) -> Word {
        let delta = self.delta_word();
        let unit = if self.power < 0 { delta.inverse() } else { delta };
        let mut out = Word::identity();
        for _ in 0..self.power.unsigned_abs() {
            out = out.concat(&unit);
        }
        for s in &self.factors {
            out = out.concat(&self.simple_word(*s));
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayNF { nf: self, names }
    }
}

struct DisplayNF<'a> {
    nf: &'a DihedralNF,
    names: &'a [String],
}

impl fmt::Display for DisplayNF<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let delta = self.nf.delta_word();
        write!(f, "({})^{}", delta.display_with(self.names), self.nf.power)?;
        for w in self.nf.factor_words() {
            let text: Vec<&str> =
                w.letters().iter().map(|l| self.names.get(l.generator).map_or("?", String::as_str)).collect();
            write!(f, " · {}", text.concat())?;
        }
        Ok(())
    }
}
