//! Words over the standard generators and generator-to-generator maps.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet};

/// A generator (vertex index) raised to `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Finite sequence of letters; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::pos(g)])
    }

    /// `g^k`.
    pub fn power(g: usize, k: i64) -> Self {
        let letter = if k < 0 { Letter::neg(g) } else { Letter::pos(g) };
        Word(vec![letter; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Freely reduced product.
    pub fn mul(&self, other: &Word) -> Word {
        self.concat(other).reduce_free()
    }

    /// Free reduction: cancels adjacent `x x^-1` pairs until none remain.
    pub fn reduce_free(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// Generators occurring in the word.
    pub fn support(&self) -> VertexSet {
        self.0.iter().map(|l| l.generator).collect()
    }

    /// Sum of the exponents of `g`.
    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.generator == g).map(|l| l.sign()).sum()
    }

    /// Keeps the letters whose generator lies in `set`.
    pub fn project(&self, set: VertexSet) -> Word {
        Word(self.0.iter().copied().filter(|l| set.contains(l.generator)).collect())
    }

    /// Renders the word with the vertex names of `graph`, grouping runs into
    /// powers: `a^2 b a^-1`. The identity prints as `1`.
    pub fn display<'a>(&'a self, graph: &'a LabeledGraph) -> impl fmt::Display + 'a {
        DisplayWord { word: self, names: graph.names() }
    }

    /// Same as [`Word::display`] with an explicit name table.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWord { word: self, names }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

struct DisplayWord<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let k = (j - i) as i64 * l.sign();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let name = self.names.get(l.generator).map(String::as_str).unwrap_or("?");
            if k == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{k}")?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Which end of an alternating product is pinned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `x y x ...`, starting with `x`.
    Left,
    /// `... y x y`, ending with `y`.
    Right,
}

/// Alternating product of `count` factors taken from `x` and `y`.
///
/// `Left` gives `x y x ...`; `Right` gives `... x y`, i.e. the word ends in `y`.
/// Factors are words, so generators, their inverses and the identity (the
/// empty word) all work.
pub fn alternating(x: &Word, y: &Word, count: usize, side: Side) -> Word {
    let mut out = Word::identity();
    for i in 0..count {
        let take_x = match side {
            Side::Left => i % 2 == 0,
            Side::Right => (count - i) % 2 == 0,
        };
        out = out.concat(if take_x { x } else { y });
    }
    out
}

/// Generator-level map of an Artin group to one of its standard parabolic
/// subgroups: each vertex goes to a vertex of the target or to the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMap {
    target: VertexSet,
    images: Vec<Option<usize>>,
}

impl GeneratorMap {
    /// Checks that `target` is fixed pointwise and every image lies in `target`.
    pub fn new(target: VertexSet, images: Vec<Option<usize>>) -> Result<Self> {
        for (v, image) in images.iter().enumerate() {
            if target.contains(v) && *image != Some(v) {
                return Err(Error::NotAdmissible(format!("generator {v} of the target is moved")));
            }
            if let Some(w) = *image {
                if !target.contains(w) {
                    return Err(Error::NotAdmissible(format!("image of {v} leaves the target")));
                }
            }
        }
        if target.iter().any(|v| v >= images.len()) {
            return Err(Error::NotAdmissible("target outside the graph".into()));
        }
        Ok(GeneratorMap { target, images })
    }

    /// Identity map on all `n` generators.
    pub fn identity(n: usize) -> Self {
        GeneratorMap { target: VertexSet::full(n), images: (0..n).map(Some).collect() }
    }

    pub fn target(&self) -> VertexSet {
        self.target
    }

    pub fn image(&self, v: usize) -> Option<usize> {
        self.images[v]
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// Image of a generator or of the identity (`None`).
    pub fn image_of(&self, v: Option<usize>) -> Option<usize> {
        v.and_then(|v| self.images[v])
    }

    /// Images of the vertices of `set`, identities dropped.
    pub fn image_set(&self, set: VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.images[v]).collect()
    }

    /// Letterwise image of `w`, freely reduced.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Word::identity();
        for l in w.letters() {
            let image = self
                .images
                .get(l.generator)
                .ok_or_else(|| Error::UnknownGenerator(l.generator.to_string()))?;
            if let Some(g) = *image {
                out.push(Letter { generator: g, inverse: l.inverse });
            }
        }
        Ok(out.reduce_free())
    }
}
