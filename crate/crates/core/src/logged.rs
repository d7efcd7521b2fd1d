//! Logs of rewrites as 2-cells: sequences of whiskered rule applications
//! that compose, invert and replay. Also witness extraction for
//! double-coset membership and endorewrites.

use std::fmt::Write as _;

use thiserror::Error;

use crate::rewrite::{Origin, RewriteError, RewriteSystem, RuleId};
use crate::words::{Alphabet, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogError {
    #[error("cannot compose: target `{left}` differs from source `{right}`")]
    Mismatch { left: String, right: String },
    #[error("step {index}: rule {rule} does not apply to `{word}` at the logged position")]
    StepMismatch { index: usize, rule: String, word: String },
    #[error("unknown rule id {0}")]
    UnknownRule(u32),
    #[error("whiskering produces a malformed word")]
    MalformedWhisker,
    #[error("replay starts from `{given}` but the cell starts from `{expected}`")]
    WrongSource { given: String, expected: String },
}

/// Access to rule sides by id, for replay and rendering.
pub trait RuleBook {
    fn sides(&self, id: RuleId) -> Option<(&Word, &Word)>;
    fn rule_label(&self, id: RuleId) -> String;
    fn alphabet(&self) -> &Alphabet;
}

/// `u ρ v`, or `u ρ⁻¹ v` when inverted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: RuleId,
    pub inverted: bool,
    pub left: Word,
    pub right: Word,
}

impl Step {
    fn ends<'a>(&self, book: &'a impl RuleBook) -> Result<(&'a Word, &'a Word), LogError> {
        let (l, r) = book.sides(self.rule).ok_or(LogError::UnknownRule(self.rule.0))?;
        Ok(if self.inverted { (r, l) } else { (l, r) })
    }
}

/// A rewrite path `source →* target`, possibly using rules backwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoCell {
    source: Word,
    target: Word,
    steps: Vec<Step>,
}

impl TwoCell {
    pub fn identity(w: Word) -> TwoCell {
        TwoCell { source: w.clone(), target: w, steps: Vec::new() }
    }

    /// `u ρ v` as a one-step cell.
    pub fn atomic(book: &impl RuleBook, rule: RuleId, left: &Word, right: &Word) -> Result<TwoCell, LogError> {
        let (l, r) = book.sides(rule).ok_or(LogError::UnknownRule(rule.0))?;
        let source = Word::whiskered(left, l, right).ok_or(LogError::MalformedWhisker)?;
        let target = Word::whiskered(left, r, right).ok_or(LogError::MalformedWhisker)?;
        Ok(TwoCell { source, target, steps: vec![Step { rule, inverted: false, left: left.clone(), right: right.clone() }] })
    }

    pub(crate) fn from_parts(source: Word, target: Word, steps: Vec<Step>) -> TwoCell {
        TwoCell { source, target, steps }
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `self • other`: first `self`, then `other`.
    pub fn compose(&self, other: &TwoCell) -> Result<TwoCell, LogError> {
        if self.target != other.source {
            return Err(LogError::Mismatch { left: format!("{:?}", self.target), right: format!("{:?}", other.source) });
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(TwoCell { source: self.source.clone(), target: other.target.clone(), steps })
    }

    pub fn invert(&self) -> TwoCell {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| Step { inverted: !s.inverted, ..s.clone() })
            .collect();
        TwoCell { source: self.target.clone(), target: self.source.clone(), steps }
    }

    /// `u · self · v`.
    pub fn whisker(&self, u: &Word, v: &Word) -> Result<TwoCell, LogError> {
        let wrap = |w: &Word| Word::whiskered(u, w, v).ok_or(LogError::MalformedWhisker);
        let mut steps = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            let left = u.concat(&s.left).ok_or(LogError::MalformedWhisker)?;
            let right = s.right.concat(v).ok_or(LogError::MalformedWhisker)?;
            steps.push(Step { rule: s.rule, inverted: s.inverted, left, right });
        }
        Ok(TwoCell { source: wrap(&self.source)?, target: wrap(&self.target)?, steps })
    }

    /// Horizontal composite `α ∘ β = α·src(β) • tgt(α)·β`.
    pub fn horizontal(&self, other: &TwoCell) -> Result<TwoCell, LogError> {
        let first = self.whisker(&Word::empty(), &other.source)?;
        let second = other.whisker(&self.target, &Word::empty())?;
        first.compose(&second)
    }

    /// The other interchange order `src(α)·β • α·tgt(β)`.
    pub fn horizontal_rev(&self, other: &TwoCell) -> Result<TwoCell, LogError> {
        let first = other.whisker(&self.source, &Word::empty())?;
        let second = self.whisker(&Word::empty(), &other.target)?;
        first.compose(&second)
    }

    /// Every word along the path, starting with `w`.
    pub fn trace(&self, w: &Word, book: &impl RuleBook) -> Result<Vec<Word>, LogError> {
        if *w != self.source {
            let al = book.alphabet();
            return Err(LogError::WrongSource { given: al.render(w), expected: al.render(&self.source) });
        }
        let mut out = vec![w.clone()];
        let mut cur = w.clone();
        for (index, s) in self.steps.iter().enumerate() {
            let (from, to) = s.ends(book)?;
            let expected = Word::whiskered(&s.left, from, &s.right);
            if expected.as_ref() != Some(&cur) {
                return Err(LogError::StepMismatch {
                    index,
                    rule: step_label(s, book),
                    word: book.alphabet().render(&cur),
                });
            }
            cur = Word::whiskered(&s.left, to, &s.right).ok_or(LogError::MalformedWhisker)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// Runs the steps from `w`, checking each factorization.
    pub fn replay(&self, w: &Word, book: &impl RuleBook) -> Result<Word, LogError> {
        let mut trace = self.trace(w, book)?;
        Ok(trace.pop().expect("trace holds at least the start word"))
    }

    /// `u ρ v` per step, steps joined by ` . `; `1` for an identity cell.
    pub fn render(&self, book: &impl RuleBook) -> String {
        if self.steps.is_empty() {
            return "1".to_string();
        }
        let al = book.alphabet();
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                out.push_str(" . ");
            }
            if !s.left.is_empty() {
                let _ = write!(out, "{} ", al.render(&s.left));
            }
            out.push_str(&step_label(s, book));
            if !s.right.is_empty() {
                let _ = write!(out, " {}", al.render(&s.right));
            }
        }
        out
    }
}

fn step_label(s: &Step, book: &impl RuleBook) -> String {
    let name = book.rule_label(s.rule);
    if s.inverted {
        format!("{name}^-1")
    } else {
        name
    }
}

/// Reduces `w` and returns the path expanded to initial rules.
pub fn logged_reduce(w: &Word, rs: &RewriteSystem) -> Result<(Word, TwoCell), RewriteError> {
    let (nf, cell) = rs.reduce_logged(w)?;
    Ok((nf, rs.expand(&cell)))
}

/// `g^ε` for a subgroup generator `g`, by index into `X_H` or `X_K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub generator: usize,
    pub exponent: i8,
}

/// Subgroup elements `h = h₁^ε₁⋯hₙ^εₙ` and `k = k₁^δ₁⋯kₘ^δₘ` with
/// `h·w₁·k = w₂` in the group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub h: Vec<Factor>,
    pub k: Vec<Factor>,
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Log(#[from] LogError),
    #[error("rule {0} has no subgroup generator attached; witnesses need a system built from a presentation")]
    UnattributedRule(String),
    #[error("generator `{0}` has no declared inverse")]
    NoInverse(String),
}

fn push_cancelling(list: &mut Vec<Factor>, f: Factor, front: bool) {
    if front {
        if list.first().is_some_and(|g| g.generator == f.generator && g.exponent == -f.exponent) {
            list.remove(0);
        } else {
            list.insert(0, f);
        }
    } else if list.last().is_some_and(|g| g.generator == f.generator && g.exponent == -f.exponent) {
        list.pop();
    } else {
        list.push(f);
    }
}

/// Reads subgroup factors off the path `Hw₁K →* nf ←* Hw₂K`. A forward
/// H-rule step `Hh·v → H·v` contributes `h⁻¹` on the left, later steps
/// outermost; K-rule steps contribute on the right symmetrically.
pub fn extract_witness(w1: &Word, w2: &Word, rs: &RewriteSystem) -> Result<Option<Witness>, WitnessError> {
    let t1 = Word::in_t(w1);
    let t2 = Word::in_t(w2);
    let (n1, c1) = rs.reduce_logged(&t1)?;
    let (n2, c2) = rs.reduce_logged(&t2)?;
    if n1 != n2 {
        return Ok(None);
    }
    let path = rs.expand(&c1.compose(&c2.invert())?);
    let mut wit = Witness::default();
    for s in path.steps() {
        let rule = rs.rule(s.rule);
        let sign: i8 = if s.inverted { 1 } else { -1 };
        match rule.origin {
            Origin::Group(_) => {}
            Origin::SubgroupH(i) => push_cancelling(&mut wit.h, Factor { generator: i, exponent: sign }, true),
            Origin::SubgroupK(i) => push_cancelling(&mut wit.k, Factor { generator: i, exponent: sign }, false),
            Origin::Imported | Origin::Derived => {
                if rule.tag_class() != crate::words::TagClass::G {
                    return Err(WitnessError::UnattributedRule(rule.name.clone()));
                }
            }
        }
    }
    Ok(Some(wit))
}

impl Witness {
    fn expand_side(factors: &[Factor], gens: &[Word], al: &Alphabet) -> Result<Word, WitnessError> {
        let mut syms = Vec::new();
        for f in factors {
            let g = &gens[f.generator];
            let w = if f.exponent > 0 {
                g.clone()
            } else {
                al.invert_word(g).ok_or_else(|| WitnessError::NoInverse(al.render(g)))?
            };
            syms.extend_from_slice(w.symbols());
        }
        Ok(Word::from(syms))
    }

    /// The untagged word `h·w₁·k` with subgroup factors spelled out.
    pub fn verification_word(&self, w1: &Word, rs: &RewriteSystem) -> Result<Word, WitnessError> {
        let al = rs.alphabet();
        let h = Self::expand_side(&self.h, rs.h_generators(), al)?;
        let k = Self::expand_side(&self.k, rs.k_generators(), al)?;
        let hw = h.concat(w1).expect("untagged words concatenate");
        Ok(hw.concat(&k).expect("untagged words concatenate"))
    }

    /// Checks `h·w₁·k` and `w₂` share a normal form under `group`.
    pub fn verify(&self, w1: &Word, w2: &Word, rs: &RewriteSystem, group: &RewriteSystem) -> Result<bool, WitnessError> {
        let lhs = self.verification_word(w1, rs)?;
        Ok(group.reduce(&lhs)? == group.reduce(w2)?)
    }

    /// `h: (x) (x) (x)` / `k: (y)^-1`, `id` for an empty side.
    pub fn render(&self, rs: &RewriteSystem) -> String {
        let al = rs.alphabet();
        let side = |fs: &[Factor], gens: &[Word]| {
            if fs.is_empty() {
                return "id".to_string();
            }
            fs.iter()
                .map(|f| {
                    let w = al.render(&gens[f.generator]);
                    if f.exponent > 0 {
                        format!("({w})")
                    } else {
                        format!("({w})^-1")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("h = {}\nk = {}", side(&self.h, rs.h_generators()), side(&self.k, rs.k_generators()))
    }
}

/// A cell from a word back to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endorewrite {
    cell: TwoCell,
}

impl Endorewrite {
    /// `c₁ • c₂⁻¹` for two paths out of the same word into the same word.
    pub fn at_source(c1: &TwoCell, c2: &TwoCell) -> Result<Endorewrite, LogError> {
        Self::check(c1, c2)?;
        Ok(Endorewrite { cell: c1.compose(&c2.invert())? })
    }

    /// `c₁⁻¹ • c₂`, an endorewrite of the common target.
    pub fn at_target(c1: &TwoCell, c2: &TwoCell) -> Result<Endorewrite, LogError> {
        Self::check(c1, c2)?;
        Ok(Endorewrite { cell: c1.invert().compose(c2)? })
    }

    fn check(c1: &TwoCell, c2: &TwoCell) -> Result<(), LogError> {
        if c1.source != c2.source {
            return Err(LogError::Mismatch { left: format!("{:?}", c1.source), right: format!("{:?}", c2.source) });
        }
        if c1.target != c2.target {
            return Err(LogError::Mismatch { left: format!("{:?}", c1.target), right: format!("{:?}", c2.target) });
        }
        Ok(())
    }

    pub fn cell(&self) -> &TwoCell {
        &self.cell
    }

    pub fn base(&self) -> &Word {
        &self.cell.source
    }
}
