//! Brute-force engines that certify bounded statements independently of the
//! normal-form code: equation systems in the free group of rank 2, relation
//! closure in dihedral Artin groups, and the exhaustive search behind the
//! `(2, 3, 4)` obstruction.

use std::collections::{HashMap, VecDeque};

use crate::dihedral::{DihedralNF, Simple};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::word::{alternating, Letter, Side, Word};

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: Option<Word>,
    pub searched_count: u64,
    pub bound: usize,
}

/// `(g, x)_len = (x, g)_len` in the free group on generators 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternatingEquation {
    pub generator: usize,
    pub len: usize,
}

impl AlternatingEquation {
    pub fn holds(&self, x: &Word) -> bool {
        let g = Word::generator(self.generator);
        let lhs = alternating(&g, x, self.len, Side::Left).reduce_free();
        let rhs = alternating(x, &g, self.len, Side::Left).reduce_free();
        lhs == rhs
    }
}

/// Freely reduced words over `a, a⁻¹, b, b⁻¹` (generators 0 and 1) by length,
/// then lexicographically in that letter order.
pub fn reduced_words(max_len: usize) -> impl Iterator<Item = Word> {
    const ALPHABET: [Letter; 4] =
        [Letter { generator: 0, inverse: false }, Letter { generator: 0, inverse: true }, Letter {
            generator: 1,
            inverse: false,
        }, Letter { generator: 1, inverse: true }];
    let mut level = vec![Word::identity()];
    let mut len = 0;
    std::iter::from_fn(move || {
        if len > max_len {
            return None;
        }
        let out = std::mem::take(&mut level);
        len += 1;
        if len <= max_len {
            for w in &out {
                for l in ALPHABET {
                    if w.letters().last().is_some_and(|&p| p == l.inv()) {
                        continue;
                    }
                    let mut next = w.clone();
                    next.push(l);
                    level.push(next);
                }
            }
        }
        Some(out)
    })
    .flatten()
}

/// First reduced word satisfying every equation, searching all reduced words
/// up to `max_len` in order.
pub fn f2_search(equations: &[AlternatingEquation], max_len: usize) -> SearchOutcome {
    let mut searched_count = 0;
    for x in reduced_words(max_len) {
        searched_count += 1;
        if equations.iter().all(|e| e.holds(&x)) {
            return SearchOutcome { found: Some(x), searched_count, bound: max_len };
        }
    }
    SearchOutcome { found: None, searched_count, bound: max_len }
}

/// Searches for `x` with `(a, x)_r = (x, a)_r` and `(b, x)_s = (x, b)_s`.
pub fn f2_system_search(r: usize, s: usize, max_len: usize) -> SearchOutcome {
    f2_search(
        &[AlternatingEquation { generator: 0, len: r }, AlternatingEquation { generator: 1, len: s }],
        max_len,
    )
}

/// Largest radius accepted by [`dihedral_ball`].
pub const MAX_BALL_RADIUS: usize = 7;

/// Partition of all words of length at most `radius` over `a^±1, b^±1`
/// (generators 0 and 1) into classes of equal elements.
#[derive(Debug, Clone)]
pub struct DihedralBall {
    pub m: u32,
    pub radius: usize,
    /// Every word of length at most `radius`, shortest first.
    pub words: Vec<Word>,
    /// Class index of each entry of `words`; classes are numbered in order
    /// of first appearance.
    pub class_of: Vec<usize>,
    /// Number of reduced words touched by the closure.
    pub explored: usize,
}

impl DihedralBall {
    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |&c| c + 1)
    }

    pub fn classes(&self) -> Vec<Vec<Word>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (w, &c) in self.words.iter().zip(&self.class_of) {
            out[c].push(w.clone());
        }
        out
    }

    pub fn class_index(&self, w: &Word) -> Option<usize> {
        self.words.iter().position(|v| v == w).map(|i| self.class_of[i])
    }

    pub fn same_class(&self, u: &Word, v: &Word) -> bool {
        matches!((self.class_index(u), self.class_index(v)), (Some(x), Some(y)) if x == y)
    }
}

// Letters packed as 2-bit codes: 0 = a, 1 = a⁻¹, 2 = b, 3 = b⁻¹.
type Packed = u64;

fn pack(letters: &[u8]) -> Packed {
    let mut code = letters.len() as u64;
    for (i, &l) in letters.iter().enumerate() {
        code |= (l as u64) << (6 + 2 * i);
    }
    code
}

fn unpack(code: Packed, buf: &mut Vec<u8>) {
    buf.clear();
    let len = (code & 63) as usize;
    buf.extend((0..len).map(|i| ((code >> (6 + 2 * i)) & 3) as u8));
}

fn letter_code(l: Letter) -> u8 {
    (l.generator as u8) * 2 + l.inverse as u8
}

fn push_reduced(out: &mut Vec<u8>, l: u8) {
    if out.last() == Some(&(l ^ 1)) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Cyclic rotations of `R = (ab..)_m (ba..)_m^-1` and of `R^-1`.
fn relator_rotations(m: u32) -> Vec<Vec<u8>> {
    let m = m as usize;
    let alt = |first: u8| (0..m).map(|i| if i % 2 == 0 { first } else { first ^ 2 }).collect::<Vec<u8>>();
    let mut r = alt(0);
    r.extend(alt(2).iter().rev().map(|&l| l ^ 1));
    let inv: Vec<u8> = r.iter().rev().map(|&l| l ^ 1).collect();
    let mut out = Vec::new();
    for base in [r, inv] {
        for k in 0..base.len() {
            let mut rot = base[k..].to_vec();
            rot.extend_from_slice(&base[..k]);
            if !out.contains(&rot) {
                out.push(rot);
            }
        }
    }
    out
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let p = self.0[x as usize];
            self.0[x as usize] = self.0[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Equality classes of short words in the dihedral Artin group with relation
/// length `m`, found by closing under relator insertion and free reduction.
/// Intermediate words may grow to `radius + 2m`.
pub fn dihedral_ball(m: u32, radius: usize) -> Result<DihedralBall> {
    if m < 2 {
        return Err(Error::BadLabel(m as u64));
    }
    if radius > MAX_BALL_RADIUS {
        return Err(Error::TooLarge(format!("radius {radius} exceeds {MAX_BALL_RADIUS}")));
    }
    let limit = radius + 2 * m as usize;
    let rotations = relator_rotations(m);

    let mut ids: HashMap<Packed, u32> = HashMap::new();
    let mut uf = UnionFind(Vec::new());
    let mut queue: VecDeque<Packed> = VecDeque::new();
    let mut node = |code: Packed, uf: &mut UnionFind, queue: &mut VecDeque<Packed>| -> u32 {
        *ids.entry(code).or_insert_with(|| {
            let id = uf.0.len() as u32;
            uf.0.push(id);
            queue.push_back(code);
            id
        })
    };

    let words: Vec<Word> = all_words(radius);
    let mut roots = Vec::with_capacity(words.len());
    let mut buf = Vec::new();
    for w in &words {
        buf.clear();
        for &l in w.letters() {
            push_reduced(&mut buf, letter_code(l));
        }
        roots.push(node(pack(&buf), &mut uf, &mut queue));
    }

    let mut letters = Vec::new();
    while let Some(code) = queue.pop_front() {
        let here = node(code, &mut uf, &mut queue);
        unpack(code, &mut letters);
        for pos in 0..=letters.len() {
            for rot in &rotations {
                buf.clear();
                buf.extend_from_slice(&letters[..pos]);
                for &l in rot {
                    push_reduced(&mut buf, l);
                }
                for &l in &letters[pos..] {
                    push_reduced(&mut buf, l);
                }
                if buf.len() <= limit {
                    let there = node(pack(&buf), &mut uf, &mut queue);
                    uf.union(here, there);
                }
            }
        }
    }
    let explored = uf.0.len();

    let mut numbering: HashMap<u32, usize> = HashMap::new();
    let class_of = roots
        .iter()
        .map(|&r| {
            let root = uf.find(r);
            let next = numbering.len();
            *numbering.entry(root).or_insert(next)
        })
        .collect();
    Ok(DihedralBall { m, radius, words, class_of, explored })
}

/// Every word (reduced or not) of length at most `max_len` over the four
/// letters, by length then lexicographically.
pub fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut level = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * 4);
        for w in &level {
            for (g, inverse) in [(0, false), (0, true), (1, false), (1, true)] {
                let mut v = w.clone();
                v.push(Letter { generator: g, inverse });
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Largest canonical length accepted by [`triangle_234_search`].
pub const MAX_234_BOUND: usize = 6;

/// Normal forms in the dihedral group with `m = 4` on generators 0 (`a`) and
/// 1 (`b`) with at most `bound` simple factors and `|Δ-exponent| <= bound`.
pub fn dihedral4_elements(bound: usize) -> Vec<DihedralNF> {
    let simples: Vec<Simple> =
        (0..2u8).flat_map(|first| (1..4u32).map(move |len| Simple { first, len })).collect();
    let mut sequences: Vec<Vec<Simple>> = vec![Vec::new()];
    let mut level: Vec<Vec<Simple>> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for seq in &level {
            for &s in &simples {
                if seq.last().map_or(true, |p| p.last() == s.first) {
                    let mut longer = seq.clone();
                    longer.push(s);
                    next.push(longer);
                }
            }
        }
        sequences.extend(next.iter().cloned());
        level = next;
    }
    let bound = bound as i64;
    let mut out = Vec::new();
    for power in -bound..=bound {
        for seq in &sequences {
            out.push(DihedralNF::from_parts(4, 0, 1, power, seq.clone()).expect("left-weighted by construction"));
        }
    }
    out
}

fn nf4(w: &Word) -> DihedralNF {
    DihedralNF::from_word(4, 0, 1, w).expect("letters a and b")
}

/// Elements of canonical length at most `bound` commuting with `a`.
pub fn commuting_with_a(bound: usize) -> Vec<Word> {
    let a = Word::generator(0);
    dihedral4_elements(bound)
        .into_iter()
        .map(|x| x.to_word())
        .filter(|x| nf4(&a.concat(x)) == nf4(&x.concat(&a)))
        .collect()
}

/// Exhaustive search for `x` in `<a, b | abab = baba>` with `ax = xa` and
/// `bxb = xbx`, among normal forms of canonical length at most `bound`.
///
/// Panics if some `x` commuting with `a` has odd `b`-exponent sum, since the
/// obstruction rests on that parity.
pub fn triangle_234_search(bound: usize) -> Result<SearchOutcome> {
    if bound > MAX_234_BOUND {
        return Err(Error::TooLarge(format!("canonical length {bound} exceeds {MAX_234_BOUND}")));
    }
    let (a, b) = (Word::generator(0), Word::generator(1));
    let mut searched_count = 0;
    let mut found = None;
    for x in dihedral4_elements(bound) {
        searched_count += 1;
        let x = x.to_word();
        if nf4(&a.concat(&x)) != nf4(&x.concat(&a)) {
            continue;
        }
        let e = x.exponent_sum(1);
        assert!(e % 2 == 0, "element commuting with a has odd b-exponent sum {e}");
        let bxb = b.concat(&x).concat(&b);
        let xbx = x.concat(&b).concat(&x);
        assert_eq!(bxb.exponent_sum(1) % 2, 0);
        assert_ne!(xbx.exponent_sum(1) % 2, 0);
        if found.is_none() && nf4(&bxb) == nf4(&xbx) {
            found = Some(x);
        }
    }
    Ok(SearchOutcome { found, searched_count, bound })
}

/// Rank of the abelianization and the class of each generator: generators
/// joined by an odd label become equal, everything else commutes.
pub fn abelianization_classes(g: &LabeledGraph) -> (usize, Vec<usize>) {
    let classes = g.odd_classes();
    let mut class_of = vec![0; g.len()];
    for (i, c) in classes.iter().enumerate() {
        for v in c.iter() {
            class_of[v] = i;
        }
    }
    (classes.len(), class_of)
}
