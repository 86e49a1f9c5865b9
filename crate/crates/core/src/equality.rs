//! Word problem for the standard parabolic subgroups that split into pieces
//! with a known normal form: cyclic groups, dihedral groups, and direct or
//! free products of those.

use crate::dihedral::DihedralNF;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet};
use crate::word::Word;

/// Outcome of [`words_equal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equality {
    Equal,
    Different,
    /// The subgroup does not decompose into supported pieces.
    Unsupported,
}

impl Equality {
    pub fn is_equal(self) -> bool {
        self == Equality::Equal
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Equality::Equal
        } else {
            Equality::Different
        }
    }
}

/// Decides whether `w1` and `w2` are equal in the standard parabolic `A_X`.
///
/// Supported when the induced graph on `X` breaks down recursively into single
/// vertices, single finite edges, direct products (all cross labels 2) and
/// free products (all cross labels infinity).
pub fn words_equal(g: &LabeledGraph, x: VertexSet, w1: &Word, w2: &Word) -> Result<Equality> {
    for w in [w1, w2] {
        if let Some(l) = w.letters().iter().find(|l| !x.contains(l.generator)) {
            let name = if l.generator < g.len() { g.name(l.generator).to_owned() } else { l.generator.to_string() };
            return Err(Error::UnknownGenerator(name));
        }
    }
    let diff = w1.concat(&w2.inverse()).reduce_free();
    Ok(match is_trivial(g, x, &diff)? {
        Some(b) => Equality::from_bool(b),
        None => Equality::Unsupported,
    })
}

/// Whether the standard parabolic on `x` falls in the supported class.
pub fn is_supported(g: &LabeledGraph, x: VertexSet) -> bool {
    if x.len() <= 2 {
        return true;
    }
    let parts = g.irreducible_components_within(x);
    if parts.len() > 1 {
        return parts.into_iter().all(|p| is_supported(g, p));
    }
    let parts = g.finite_components_within(x);
    parts.len() > 1 && parts.into_iter().all(|p| is_supported(g, p))
}

/// `Some(true)` when `w` is trivial in `A_x`, `None` when unsupported.
fn is_trivial(g: &LabeledGraph, x: VertexSet, w: &Word) -> Result<Option<bool>> {
    let w = w.reduce_free();
    if w.is_empty() {
        // still report unsupported groups consistently
        return Ok(is_supported(g, x).then_some(true));
    }
    match x.len() {
        0 => unreachable!("non-empty word over an empty generating set"),
        1 => return Ok(Some(false)),
        _ => {}
    }
    let parts = g.irreducible_components_within(x);
    if parts.len() > 1 {
        // direct product: trivial iff every projection is trivial
        let mut all = true;
        for p in parts {
            match is_trivial(g, p, &w.project(p))? {
                None => return Ok(None),
                Some(false) => all = false,
                Some(true) => {}
            }
        }
        return Ok(Some(all));
    }
    if x.len() == 2 {
        let mut it = x.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        let label = g.label(a, b);
        if label.is_finite() {
            return Ok(Some(DihedralNF::from_word_label(label, a, b, &w)?.is_identity()));
        }
    }
    let parts = g.finite_components_within(x);
    if parts.len() > 1 {
        return free_product_trivial(g, &parts, &w);
    }
    Ok(None)
}

/// Free product: collapse syllables, dropping those trivial in their factor,
/// until the syllable sequence is reduced. The element is trivial iff nothing
/// is left.
fn free_product_trivial(g: &LabeledGraph, parts: &[VertexSet], w: &Word) -> Result<Option<bool>> {
    let part_of = |gen: usize| parts.iter().position(|p| p.contains(gen)).expect("letter in some factor");
    let mut stack: Vec<(usize, Word)> = Vec::new();
    for &l in w.letters() {
        let p = part_of(l.generator);
        match stack.last_mut() {
            Some((q, syl)) if *q == p => syl.push(l),
            _ => stack.push((p, Word::from_letters(vec![l]))),
        }
        // a syllable that just became trivial disappears and may let its
        // neighbours merge
        loop {
            let Some((p, syl)) = stack.last() else { break };
            match is_trivial(g, parts[*p], syl)? {
                None => return Ok(None),
                Some(false) => break,
                Some(true) => {
                    stack.pop();
                    if stack.len() >= 2 && stack[stack.len() - 1].0 == stack[stack.len() - 2].0 {
                        let (_, tail) = stack.pop().unwrap();
                        let last = stack.last_mut().unwrap();
                        last.1 = last.1.concat(&tail);
                    } else {
                        break;
                    }
                }
            }
        }
    }
    for (p, _) in &stack {
        if !is_supported(g, parts[*p]) {
            return Ok(None);
        }
    }
    Ok(Some(stack.is_empty()))
}
