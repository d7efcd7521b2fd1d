//! Rules, rewrite systems partitioned by tag class, and reduction.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::OnceLock;

use rand::Rng;
use thiserror::Error;

use crate::logged::{RuleBook, Step, TwoCell};
use crate::presentation::{parse_presentation, DoubleCosetPresentation, ParseError};
use crate::words::{Alphabet, OrderSpec, TagClass, Word, WordError};

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("cannot orient `{lhs}` against `{rhs}`: the sides are equal")]
    Unorientable { lhs: String, rhs: String },
    #[error("rule `{lhs} -> {rhs}` changes the tags of its word")]
    TagMismatch { lhs: String, rhs: String },
    #[error("reduction exceeded the step budget of {0}")]
    StepBudget(usize),
    #[error("rule `{lhs} -> {rhs}` is not decreasing in the order")]
    NotDecreasing { lhs: String, rhs: String },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleId(pub u32);

impl RuleId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Where a rule came from. Initial rules remember which relation or
/// subgroup generator they encode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Group(usize),
    SubgroupH(usize),
    SubgroupK(usize),
    /// Read from a rewrite-system file; treated as an axiom.
    Imported,
    Derived,
}

impl Origin {
    pub fn is_initial(self) -> bool {
        !matches!(self, Origin::Derived)
    }
}

#[derive(Clone, Debug)]
pub struct Rule {
    pub id: RuleId,
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
    pub origin: Origin,
    /// Cell from `lhs` to `rhs` in terms of earlier rules (derived rules only).
    pub log: Option<TwoCell>,
    expanded: OnceLock<TwoCell>,
}

impl Rule {
    pub fn tag_class(&self) -> TagClass {
        self.lhs.tag_class()
    }
}

/// Rules over `T₊ = ({H,K} ∪ X_G)*`, split into `R_G`, `R_H`, `R_K`, `R_HK`
/// by the tags of their sides. Removed rules stay in the archive so logs
/// referring to them can still be expanded.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    order: OrderSpec,
    h_generators: Vec<Word>,
    k_generators: Vec<Word>,
    archive: Vec<Rule>,
    active: Vec<RuleId>,
    is_active: Vec<bool>,
    by_first: Vec<Vec<RuleId>>,
    max_lhs: usize,
    pub(crate) complete: bool,
    pub(crate) limit_reached: bool,
    max_steps: usize,
    next_alpha: usize,
    next_beta: usize,
}

pub const DEFAULT_MAX_STEPS: usize = 100_000;

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, order: OrderSpec) -> Self {
        let n = alphabet.len();
        RewriteSystem {
            alphabet,
            order,
            h_generators: Vec::new(),
            k_generators: Vec::new(),
            archive: Vec::new(),
            active: Vec::new(),
            is_active: Vec::new(),
            by_first: vec![Vec::new(); n],
            max_lhs: 0,
            complete: false,
            limit_reached: false,
            max_steps: DEFAULT_MAX_STEPS,
            next_alpha: 1,
            next_beta: 1,
        }
    }

    /// `R = R_G ∪ {(Hh, H) : h ∈ X_H} ∪ {(kK, K) : k ∈ X_K}`, every pair
    /// oriented larger-to-smaller. `R_HK` starts empty.
    pub fn initial(p: &DoubleCosetPresentation) -> Result<Self, RewriteError> {
        let mut rs = RewriteSystem::new(p.alphabet().clone(), p.order.clone());
        rs.h_generators = p.h_generators.clone();
        rs.k_generators = p.k_generators.clone();
        for (i, (l, r)) in p.group.rules().into_iter().enumerate() {
            let name = format!("a{}", i + 1);
            rs.push_oriented(l, r, Origin::Group(i), name)?;
        }
        rs.next_alpha = rs.archive.len() + 1;
        let mut beta = 1;
        for (i, h) in p.h_generators.iter().enumerate() {
            let l = Word::tagged(true, h, false);
            let r = Word::tagged(true, &Word::empty(), false);
            rs.push_oriented(l, r, Origin::SubgroupH(i), format!("b{beta}"))?;
            beta += 1;
        }
        for (i, k) in p.k_generators.iter().enumerate() {
            let l = Word::tagged(false, k, true);
            let r = Word::tagged(false, &Word::empty(), true);
            rs.push_oriented(l, r, Origin::SubgroupK(i), format!("b{beta}"))?;
            beta += 1;
        }
        rs.next_beta = beta;
        Ok(rs)
    }

    /// A system from explicit pairs, each oriented by `order`.
    pub fn from_pairs(alphabet: Alphabet, order: OrderSpec, pairs: &[(Word, Word)]) -> Result<Self, RewriteError> {
        let mut rs = RewriteSystem::new(alphabet, order);
        for (l, r) in pairs {
            let name = rs.fresh_name(l.tag_class());
            rs.push_oriented(l.clone(), r.clone(), Origin::Imported, name)?;
        }
        Ok(rs)
    }

    fn orient(&self, a: Word, b: Word) -> Result<(Word, Word), RewriteError> {
        if a.tags() != b.tags() {
            return Err(RewriteError::TagMismatch { lhs: self.alphabet.render(&a), rhs: self.alphabet.render(&b) });
        }
        match self.order.try_compare(&a, &b, &self.alphabet)? {
            Ordering::Greater => Ok((a, b)),
            Ordering::Less => Ok((b, a)),
            Ordering::Equal => {
                Err(RewriteError::Unorientable { lhs: self.alphabet.render(&a), rhs: self.alphabet.render(&b) })
            }
        }
    }

    fn push_oriented(&mut self, a: Word, b: Word, origin: Origin, name: String) -> Result<RuleId, RewriteError> {
        let (lhs, rhs) = self.orient(a, b)?;
        Ok(self.push_rule(lhs, rhs, origin, None, name))
    }

    pub(crate) fn fresh_name(&mut self, class: TagClass) -> String {
        if class == TagClass::G {
            self.next_alpha += 1;
            format!("a{}", self.next_alpha - 1)
        } else {
            self.next_beta += 1;
            format!("b{}", self.next_beta - 1)
        }
    }

    /// Names surviving derived rules consecutively after the initial ones,
    /// in creation order; removed rules are numbered after them.
    pub(crate) fn renumber_derived(&mut self) {
        let initial = |g: bool| {
            self.archive.iter().filter(|r| r.origin.is_initial() && (r.tag_class() == TagClass::G) == g).count()
        };
        let (mut alpha, mut beta) = (initial(true) + 1, initial(false) + 1);
        let derived: Vec<RuleId> = self.archive.iter().filter(|r| !r.origin.is_initial()).map(|r| r.id).collect();
        let (live, dead): (Vec<RuleId>, Vec<RuleId>) = derived.into_iter().partition(|&id| self.is_active(id));
        for id in live.into_iter().chain(dead) {
            let r = &mut self.archive[id.index()];
            if r.tag_class() == TagClass::G {
                r.name = format!("a{alpha}");
                alpha += 1;
            } else {
                r.name = format!("b{beta}");
                beta += 1;
            }
        }
        self.next_alpha = alpha;
        self.next_beta = beta;
    }

    /// Appends an active rule; `lhs > rhs` is the caller's responsibility.
    pub(crate) fn push_rule(&mut self, lhs: Word, rhs: Word, origin: Origin, log: Option<TwoCell>, name: String) -> RuleId {
        let id = RuleId(self.archive.len() as u32);
        self.max_lhs = self.max_lhs.max(lhs.len());
        if let Some(&first) = lhs.symbols().first() {
            self.by_first[first.index()].push(id);
        }
        self.archive.push(Rule { id, name, lhs, rhs, origin, log, expanded: OnceLock::new() });
        self.active.push(id);
        self.is_active.push(true);
        id
    }

    pub(crate) fn deactivate(&mut self, id: RuleId) {
        if !self.is_active[id.index()] {
            return;
        }
        self.is_active[id.index()] = false;
        self.active.retain(|&r| r != id);
        if let Some(&first) = self.archive[id.index()].lhs.symbols().first() {
            self.by_first[first.index()].retain(|&r| r != id);
        }
    }

    /// Swaps `old` for `new` at the same position in the active order.
    pub(crate) fn replace_active(&mut self, old: RuleId, new: RuleId) {
        let pos_old = self.active.iter().position(|&r| r == old);
        self.deactivate(old);
        if let Some(p) = pos_old {
            if let Some(q) = self.active.iter().position(|&r| r == new) {
                self.active.remove(q);
                self.active.insert(p.min(self.active.len()), new);
            }
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn h_generators(&self) -> &[Word] {
        &self.h_generators
    }

    pub fn k_generators(&self) -> &[Word] {
        &self.k_generators
    }

    pub fn set_hk_generators(&mut self, h: Vec<Word>, k: Vec<Word>) {
        self.h_generators = h;
        self.k_generators = k;
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn limit_reached(&self) -> bool {
        self.limit_reached
    }

    pub fn max_steps(&self) -> usize {
        self.max_steps
    }

    pub fn set_max_steps(&mut self, n: usize) {
        self.max_steps = n.max(1);
    }

    /// Active rules in insertion order.
    pub fn rules(&self) -> impl Iterator<Item = &Rule> + '_ {
        self.active.iter().map(move |id| &self.archive[id.index()])
    }

    pub fn rule_ids(&self) -> &[RuleId] {
        &self.active
    }

    pub fn len(&self) -> usize {
        self.active.len()
    }

    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }

    /// Active rules of one partition class.
    pub fn rules_in(&self, class: TagClass) -> impl Iterator<Item = &Rule> + '_ {
        self.rules().filter(move |r| r.tag_class() == class)
    }

    /// Any rule ever created, active or not.
    pub fn rule(&self, id: RuleId) -> &Rule {
        &self.archive[id.index()]
    }

    pub fn is_active(&self, id: RuleId) -> bool {
        self.is_active.get(id.index()).copied().unwrap_or(false)
    }

    pub fn archive(&self) -> &[Rule] {
        &self.archive
    }

    /// Finds the active rule with exactly this left-hand side.
    pub fn find_rule(&self, lhs: &Word) -> Option<&Rule> {
        self.rules().find(|r| r.lhs == *lhs)
    }

    /// A sub-system holding only the given active rules, for building
    /// acceptors from a chosen rule subset.
    pub fn restricted_to<F: Fn(&Rule) -> bool>(&self, keep: F) -> RewriteSystem {
        let mut out = self.clone();
        let drop: Vec<RuleId> = self.rules().filter(|r| !keep(r)).map(|r| r.id).collect();
        for id in drop {
            out.deactivate(id);
        }
        out.complete = false;
        out
    }

    /// Leftmost redex at or after `from`; ties go to the earliest active rule.
    pub fn find_redex(&self, w: &Word, from: usize) -> Option<(usize, RuleId)> {
        let syms = w.symbols();
        for i in from..syms.len() {
            for &id in &self.by_first[syms[i].index()] {
                if w.starts_with_at(i, &self.archive[id.index()].lhs) {
                    return Some((i, id));
                }
            }
        }
        None
    }

    /// Every redex `(position, rule)` in `w`.
    pub fn all_redexes(&self, w: &Word) -> Vec<(usize, RuleId)> {
        let syms = w.symbols();
        let mut out = Vec::new();
        for i in 0..syms.len() {
            for &id in &self.by_first[syms[i].index()] {
                if w.starts_with_at(i, &self.archive[id.index()].lhs) {
                    out.push((i, id));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w, 0).is_none()
    }

    /// Applies `id` at `pos`; the caller guarantees the lhs occurs there.
    pub fn apply_at(&self, w: &Word, pos: usize, id: RuleId) -> Word {
        let r = &self.archive[id.index()];
        debug_assert!(w.starts_with_at(pos, &r.lhs));
        w.replace(pos, r.lhs.len(), &r.rhs)
    }

    pub(crate) fn step_at(&self, w: &Word, pos: usize, id: RuleId) -> Step {
        let len = self.archive[id.index()].lhs.len();
        Step { rule: id, inverted: false, left: w.slice(0, pos), right: w.slice(pos + len, w.len()) }
    }

    fn reduce_inner(&self, w: &Word, mut log: Option<&mut Vec<Step>>) -> Result<Word, RewriteError> {
        let mut cur = w.clone();
        let mut from = 0;
        let mut steps = 0usize;
        while let Some((pos, id)) = self.find_redex(&cur, from) {
            steps += 1;
            if steps > self.max_steps {
                return Err(RewriteError::StepBudget(self.max_steps));
            }
            if let Some(log) = log.as_deref_mut() {
                log.push(self.step_at(&cur, pos, id));
            }
            cur = self.apply_at(&cur, pos, id);
            from = pos.saturating_sub(self.max_lhs.saturating_sub(1));
        }
        Ok(cur)
    }

    /// Reduces `w` to an irreducible word, leftmost redex first.
    pub fn reduce(&self, w: &Word) -> Result<Word, RewriteError> {
        self.reduce_inner(w, None)
    }

    /// As [`reduce`](Self::reduce), also returning the cell of the
    /// reduction. Steps reference the rules that fired, derived or not;
    /// see [`expand`](Self::expand).
    pub fn reduce_logged(&self, w: &Word) -> Result<(Word, TwoCell), RewriteError> {
        let mut steps = Vec::new();
        let nf = self.reduce_inner(w, Some(&mut steps))?;
        Ok((nf.clone(), TwoCell::from_parts(w.clone(), nf, steps)))
    }

    /// Reduction that picks a uniformly random redex at every step.
    pub fn reduce_random<R: Rng>(&self, w: &Word, rng: &mut R) -> Result<Word, RewriteError> {
        let mut cur = w.clone();
        for _ in 0..self.max_steps {
            let redexes = self.all_redexes(&cur);
            if redexes.is_empty() {
                return Ok(cur);
            }
            let (pos, id) = redexes[rng.gen_range(0..redexes.len())];
            cur = self.apply_at(&cur, pos, id);
        }
        if self.is_irreducible(&cur) {
            Ok(cur)
        } else {
            Err(RewriteError::StepBudget(self.max_steps))
        }
    }

    /// Rewrites a cell so that every step names an initial rule, by
    /// substituting the stored logs of derived rules recursively.
    pub fn expand(&self, cell: &TwoCell) -> TwoCell {
        let mut steps = Vec::new();
        for step in cell.steps() {
            let rule = &self.archive[step.rule.index()];
            match (&rule.log, rule.origin) {
                (Some(_), Origin::Derived) => {
                    let inner = self.expanded_log(step.rule);
                    let placed = inner
                        .whisker(&step.left, &step.right)
                        .expect("whiskers of a valid step are valid for its log");
                    let placed = if step.inverted { placed.invert() } else { placed };
                    steps.extend(placed.steps().iter().cloned());
                }
                _ => steps.push(step.clone()),
            }
        }
        TwoCell::from_parts(cell.source().clone(), cell.target().clone(), steps)
    }

    /// The log of a derived rule over initial rules only, computed once.
    pub fn expanded_log(&self, id: RuleId) -> &TwoCell {
        let rule = &self.archive[id.index()];
        rule.expanded.get_or_init(|| match &rule.log {
            Some(log) if rule.origin == Origin::Derived => self.expand(log),
            _ => TwoCell::from_parts(
                rule.lhs.clone(),
                rule.rhs.clone(),
                vec![Step { rule: id, inverted: false, left: Word::empty(), right: Word::empty() }],
            ),
        })
    }

    /// `lhs -> rhs [name]` with words space-separated.
    pub fn render_rule(&self, r: &Rule) -> String {
        format!("{} -> {} [{}]", self.alphabet.render(&r.lhs), self.alphabet.render(&r.rhs), r.name)
    }

    /// Text form: header lines, then one rule per line grouped by partition.
    /// With `logs`, each derived rule is followed by a comment holding its
    /// log expanded to initial rules.
    pub fn to_text(&self, logs: bool) -> String {
        let al = &self.alphabet;
        let mut out = String::new();
        let status = if self.complete {
            "complete"
        } else if self.limit_reached {
            "partial (limit reached)"
        } else {
            "not known to be complete"
        };
        let _ = writeln!(out, "# status: {status}");
        let _ = writeln!(out, "generators: {}", al.generator_names().join(" "));
        let pairs: Vec<String> = al
            .generators()
            .filter_map(|g| al.inverse(g).map(|i| (g, i)))
            .filter(|(g, i)| g <= i)
            .map(|(g, i)| format!("{} {}", al.name(g), al.name(i)))
            .collect();
        if !pairs.is_empty() {
            let _ = writeln!(out, "inverses: {}", pairs.join(", "));
        }
        let _ = writeln!(out, "order: {}", self.order.render(al));
        for (class, title) in [(TagClass::G, "R_G"), (TagClass::H, "R_H"), (TagClass::K, "R_K"), (TagClass::HK, "R_HK")] {
            let _ = writeln!(out, "# {title}");
            for r in self.rules_in(class) {
                let _ = writeln!(out, "{}", self.render_rule(r));
                if logs && r.origin == Origin::Derived && r.log.is_some() {
                    let cell = self.expanded_log(r.id);
                    let _ = writeln!(out, "#   {} = {}", r.name, cell.render(self));
                }
            }
        }
        out
    }

    /// Reads the text form back. Rules keep their names and are treated as
    /// axioms; the partition is recomputed from their tags.
    pub fn from_text(text: &str) -> Result<RewriteSystem, RewriteError> {
        let mut header = String::new();
        let mut rule_lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line.contains("->") && !line.starts_with("rules:") {
                rule_lines.push((i + 1, line.to_string()));
            } else {
                header.push_str(line);
                header.push('\n');
            }
        }
        let p = parse_presentation(&header)?;
        if !p.group.explicit_rules().is_empty() || !p.h_generators.is_empty() || !p.k_generators.is_empty() {
            return Err(RewriteError::Format { line: 0, msg: "system files list rules one per line".into() });
        }
        let mut rs = RewriteSystem::new(p.alphabet().clone(), p.order.clone());
        for (line, text) in rule_lines {
            let (body, name) = match text.rfind('[') {
                Some(i) if text.ends_with(']') => (&text[..i], Some(text[i + 1..text.len() - 1].trim().to_string())),
                _ => (text.as_str(), None),
            };
            let (l, r) = body
                .split_once("->")
                .ok_or_else(|| RewriteError::Format { line, msg: format!("malformed rule `{text}`") })?;
            let lhs = rs.alphabet.parse_word(l).map_err(|e| RewriteError::Format { line, msg: e.to_string() })?;
            let rhs = rs.alphabet.parse_word(r).map_err(|e| RewriteError::Format { line, msg: e.to_string() })?;
            if lhs.tags() != rhs.tags() {
                return Err(RewriteError::TagMismatch { lhs: l.trim().into(), rhs: r.trim().into() });
            }
            if rs.order.compare_words(&lhs, &rhs) != Ordering::Greater {
                return Err(RewriteError::NotDecreasing { lhs: l.trim().into(), rhs: r.trim().into() });
            }
            let name = match name {
                Some(n) => n,
                None => rs.fresh_name(lhs.tag_class()),
            };
            rs.push_rule(lhs, rhs, Origin::Imported, None, name);
        }
        rs.next_alpha = rs.archive.len() + 1;
        rs.next_beta = rs.archive.len() + 1;
        Ok(rs)
    }

    /// The symbol list of a word literal, for callers holding only text.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        self.alphabet.parse_word(text)
    }
}

impl RuleBook for RewriteSystem {
    fn sides(&self, id: RuleId) -> Option<(&Word, &Word)> {
        self.archive.get(id.index()).map(|r| (&r.lhs, &r.rhs))
    }

    fn rule_label(&self, id: RuleId) -> String {
        self.archive.get(id.index()).map_or_else(|| format!("r{}", id.0), |r| r.name.clone())
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}
