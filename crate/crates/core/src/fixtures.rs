//! Presentations used throughout the tests and examples, plus the
//! triangle-group rule families instantiated up to a cutoff.

use crate::presentation::{parse_presentation, DoubleCosetPresentation};
use crate::rewrite::{RewriteError, RewriteSystem};
use crate::words::Word;

/// Free group on `a, b`; `H = ⟨a⁶⟩`, `K = ⟨a⁴⟩`.
pub const FREE_POWERS: &str = include_str!("../fixtures/free_powers.pres");
/// Trefoil group `⟨x, y | x³ = y²⟩`.
pub const TREFOIL: &str = include_str!("../fixtures/trefoil.pres");
/// Trefoil group with `H = ⟨x⟩`, `K = ⟨y⟩`.
pub const TREFOIL_DC: &str = include_str!("../fixtures/trefoil_dc.pres");
/// `S₃ = ⟨s, t | s², t², (st)³⟩` with `H = ⟨s⟩`, `K = ⟨t⟩`.
pub const S3: &str = include_str!("../fixtures/s3.pres");
/// Triangle group `⟨a, b | a³, b³, (ab)³⟩` with `H = ⟨ab⟩`, `K = ⟨ba⟩`.
pub const TRIANGLE: &str = include_str!("../fixtures/triangle.pres");
/// Shortlex word acceptor for the triangle group, as a table.
pub const TRIANGLE_GROUP_ACCEPTOR: &str = include_str!("../fixtures/triangle_group_acceptor.table");
/// Minimal double-coset automaton for [`FREE_POWERS`], transcribed.
pub const FREE_POWERS_TABLE: &str = include_str!("../fixtures/free_powers_acceptor.table");
/// Normal forms of the triangle-group double cosets.
pub const TRIANGLE_REGEX: &str = "H(a + (1+A)(bA)* + AB(aB)*A + b(aB)⁺A(bA)* + A(bA)*(Ba)*b)K";
/// Normal forms of the trefoil group.
pub const TREFOIL_REGEX: &str = "(1+y)x(yx+xyx)*(1+x)(y*+Y⁺) + (y*+Y⁺)";

pub fn presentation(text: &str) -> DoubleCosetPresentation {
    parse_presentation(text).expect("bundled fixtures parse")
}

fn power(unit: &str, n: usize) -> String {
    vec![unit; n].join(" ")
}

/// Tagged rules of the triangle-group double cosets for `0 ≤ n ≤ cutoff`:
///
/// ```text
/// R_H  = (Hab, H), (HaB, Hb), (H(bA)ⁿB, H(Ab)ⁿa)
/// R_K  = (baK, K), (BaK, bK), (B(Ab)ⁿK, a(bA)ⁿK)
/// R_HK = (Hb(Ab)ⁿK, H(Ab)ⁿAK)
/// ```
///
/// Together with an imported group acceptor these describe the normal
/// forms; the returned system has no group rules.
pub fn triangle_family(cutoff: usize) -> Result<RewriteSystem, RewriteError> {
    let p = presentation(TRIANGLE);
    let al = p.alphabet().clone();
    let mut rules: Vec<(String, String)> = vec![
        ("H a b".into(), "H".into()),
        ("H a B".into(), "H b".into()),
        ("b a K".into(), "K".into()),
        ("B a K".into(), "b K".into()),
    ];
    for n in 0..=cutoff {
        let (ba, ab) = (power("b A", n), power("A b", n));
        rules.push((format!("H {ba} B"), format!("H {ab} a")));
        rules.push((format!("B {ab} K"), format!("a {ba} K")));
        rules.push((format!("H b {ab} K"), format!("H {ab} A K")));
    }
    let pairs: Vec<(Word, Word)> = rules
        .iter()
        .map(|(l, r)| Ok((al.parse_word(l)?, al.parse_word(r)?)))
        .collect::<Result<_, RewriteError>>()?;
    let mut rs = RewriteSystem::from_pairs(al, p.order.clone(), &pairs)?;
    rs.set_hk_generators(p.h_generators.clone(), p.k_generators.clone());
    Ok(rs)
}
