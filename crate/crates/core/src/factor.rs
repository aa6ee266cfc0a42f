//! Rank-preserving idempotent factorization of singular transformations.
//!
//! Any `a` splits as `a = e∘g` with `e` idempotent and `g` a permutation;
//! writing `g` as a product of transpositions and eliminating them one at a
//! time through [`swap_rewrite`] turns the tail into idempotents of the same
//! rank as `a`. Every rewrite case is driven by an [`IdempotentPattern`], so
//! the conjugacy machinery can reuse the identical case analysis with
//! different pattern members.

use serde::Serialize;

use crate::conjugacy::conjugate;
use crate::error::{Error, Result};
use crate::idempotent::{Idempotent, IdempotentPattern, PatternEntry};
use crate::transform::{Permutation, Transformation};

/// Splits `a` into an idempotent and a permutation with `e∘g = a`.
///
/// `e` is the idempotent on `kernel(a)` whose cross-section is the minimum
/// of each class; `g` extends the induced injection (class minimum to the
/// class's image value) by matching the unused domain and codomain points in
/// increasing order.
pub fn decompose(a: &Transformation) -> (Idempotent, Permutation) {
    let n = a.n();
    let partition = a.kernel();
    let mins: Vec<usize> = partition.classes().iter().map(|class| class[0]).collect();
    let e = Idempotent::from_partition(partition, mins.clone())
        .expect("class minima form a cross-section");

    let mut img = vec![0usize; n];
    let mut used_codomain = vec![false; n];
    for &min in &mins {
        let value = a.apply(min);
        img[min - 1] = value;
        used_codomain[value - 1] = true;
    }
    let spare_domain: Vec<usize> = (1..=n).filter(|&x| img[x - 1] == 0).collect();
    let spare_codomain = (1..=n).filter(|&y| !used_codomain[y - 1]);
    for (x, y) in spare_domain.into_iter().zip(spare_codomain) {
        img[x - 1] = y;
    }
    let g = Permutation::from_images(img).expect("extension is a bijection");
    debug_assert_eq!(
        e.as_transformation().compose(g.as_transformation()).unwrap(),
        *a
    );
    (e, g)
}

/// Writes `g` as a left-to-right product of transpositions.
///
/// Each cycle, traversed from its minimal point, contributes the swaps
/// `(c1 c2)(c1 c3)...(c1 cl)`; cycles are processed in increasing order of
/// minimal point. The identity yields the empty list.
pub fn transpositions(g: &Permutation) -> Vec<(usize, usize)> {
    let mut swaps = Vec::new();
    for cycle in g.cycles() {
        let head = cycle[0];
        for &point in &cycle[1..] {
            swaps.push((head, point));
        }
    }
    swaps
}

/// The idempotent patterns realizing `a∘(x y) = a∘b`.
///
/// Returns 0, 1, or 3 patterns depending on how the swapped points meet the
/// image of `a`:
/// - neither point in the image: the swap is absorbed, no factor needed;
/// - exactly one point in the image: one pattern, whose distinguished class
///   joins the image point to the outside point;
/// - both points in the image: three patterns routed through the smallest
///   point `u` outside the image.
///
/// Any idempotents matching the patterns, multiplied in order, satisfy
/// `a∘(x y) = a∘e₁⋯`, and all have rank `rank(a)`.
pub fn swap_rewrite_patterns(
    a: &Transformation,
    swap: (usize, usize),
) -> Result<Vec<IdempotentPattern>> {
    let n = a.n();
    let (x, y) = swap;
    for point in [x, y] {
        if point < 1 || point > n {
            return Err(Error::PointOutOfRange { point, n });
        }
    }
    if x == y {
        return Err(Error::InvalidTransposition { x, y });
    }
    if a.is_permutation() {
        return Err(Error::NotSingular);
    }

    let image = a.image();
    let in_image = |p: usize| image.binary_search(&p).is_ok();
    let rest = |skip: &[usize]| -> Vec<PatternEntry> {
        image
            .iter()
            .filter(|p| !skip.contains(p))
            .map(|&p| PatternEntry::new(p, vec![]))
            .collect()
    };

    match (in_image(x), in_image(y)) {
        (false, false) => Ok(vec![]),
        (true, false) | (false, true) => {
            // The image point plays the distinguished role regardless of the
            // swap's coordinate order.
            let (a1, outside) = if in_image(x) { (x, y) } else { (y, x) };
            let mut entries = vec![PatternEntry::new(outside, vec![a1])];
            entries.extend(rest(&[a1]));
            Ok(vec![IdempotentPattern::new(n, entries)?])
        }
        (true, true) => {
            let (a1, a2) = (x, y);
            let u = (1..=n)
                .find(|&p| !in_image(p))
                .expect("singular map misses a point");
            let mut first = vec![
                PatternEntry::new(a1, vec![]),
                PatternEntry::new(u, vec![a2]),
            ];
            first.extend(rest(&[a1, a2]));
            let mut second = vec![
                PatternEntry::new(u, vec![]),
                PatternEntry::new(a2, vec![a1]),
            ];
            second.extend(rest(&[a1, a2]));
            let mut third = vec![
                PatternEntry::new(a1, vec![u]),
                PatternEntry::new(a2, vec![]),
            ];
            third.extend(rest(&[a1, a2]));
            Ok(vec![
                IdempotentPattern::new(n, first)?,
                IdempotentPattern::new(n, second)?,
                IdempotentPattern::new(n, third)?,
            ])
        }
    }
}

/// Rewrites the swap against canonical pattern members: a list of 0, 1, or 3
/// same-rank idempotents whose ordered product absorbs `(x y)` after `a`.
pub fn swap_rewrite(a: &Transformation, swap: (usize, usize)) -> Result<Vec<Idempotent>> {
    Ok(swap_rewrite_patterns(a, swap)?
        .iter()
        .map(IdempotentPattern::canonical)
        .collect())
}

/// Provenance tag for one factor of a [`Factorization`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    SeedIdempotent,
    Lemma1Case2,
    Lemma1Case3E2,
    Lemma1Case3E3,
    Lemma1Case3E4,
    Conjugate,
}

impl FactorKind {
    /// Wire name used in JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            FactorKind::SeedIdempotent => "SEED_IDEMPOTENT",
            FactorKind::Lemma1Case2 => "LEMMA1_CASE2",
            FactorKind::Lemma1Case3E2 => "LEMMA1_CASE3_E2",
            FactorKind::Lemma1Case3E3 => "LEMMA1_CASE3_E3",
            FactorKind::Lemma1Case3E4 => "LEMMA1_CASE3_E4",
            FactorKind::Conjugate => "CONJUGATE",
        }
    }

    fn requires_idempotent(self) -> bool {
        !matches!(self, FactorKind::Conjugate)
    }
}

/// One factor with its provenance; conjugate factors carry the witness pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub value: Transformation,
    pub kind: FactorKind,
    pub conjugator: Option<Permutation>,
    pub base: Option<Transformation>,
}

impl Factor {
    pub fn idempotent(value: Transformation, kind: FactorKind) -> Self {
        Self {
            value,
            kind,
            conjugator: None,
            base: None,
        }
    }
}

/// An ordered factor list together with the input it claims to multiply to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub input: Transformation,
    pub rank: usize,
    pub factors: Vec<Factor>,
}

impl Factorization {
    /// Left-to-right product of the factor values.
    pub fn product(&self) -> Option<Transformation> {
        let mut iter = self.factors.iter();
        let first = iter.next()?.value.clone();
        iter.try_fold(first, |acc, factor| acc.compose(&factor.value).ok())
    }

    /// True iff the product equals the input and every factor honors its
    /// kind's contract: idempotency and rank equality for idempotent kinds,
    /// a reproducing conjugator witness for conjugate kinds.
    pub fn verify(&self) -> bool {
        let product_ok = self.product().is_some_and(|p| p == self.input);
        product_ok
            && self.factors.iter().all(|factor| {
                if factor.value.rank() != self.rank {
                    return false;
                }
                if factor.kind.requires_idempotent() {
                    factor.value.is_idempotent()
                } else {
                    match (&factor.base, &factor.conjugator) {
                        (Some(base), Some(g)) => {
                            conjugate(base, g).is_ok_and(|value| value == factor.value)
                        }
                        _ => false,
                    }
                }
            })
    }

    /// JSON form with fixed field names and order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FactorizationJson::from(self)).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&FactorizationJson::from(self)).expect("serializable")
    }
}

#[derive(Serialize)]
struct FactorizationJson {
    n: usize,
    input: String,
    rank: usize,
    factors: Vec<FactorJson>,
    verified: bool,
}

#[derive(Serialize)]
struct FactorJson {
    images: String,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjugator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<String>,
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        Self {
            n: f.input.n(),
            input: f.input.to_string(),
            rank: f.rank,
            factors: f
                .factors
                .iter()
                .map(|factor| FactorJson {
                    images: factor.value.to_string(),
                    kind: factor.kind.as_str(),
                    conjugator: factor.conjugator.as_ref().map(|g| g.to_string()),
                    base: factor.base.as_ref().map(|b| b.to_string()),
                })
                .collect(),
            verified: f.verify(),
        }
    }
}

/// Factors a singular transformation into idempotents of its own rank.
///
/// The factor list starts with the idempotent seed from [`decompose`] and
/// appends the rewrite of each transposition of `g` in turn; the product of
/// the factors equals `a` and every factor has rank `rank(a)`.
pub fn factor_idempotents(a: &Transformation) -> Result<Factorization> {
    if a.is_permutation() {
        return Err(Error::NotSingular);
    }
    let (e, g) = decompose(a);
    let mut factors = vec![Factor::idempotent(
        e.as_transformation().clone(),
        FactorKind::SeedIdempotent,
    )];
    let mut partial = e.into_transformation();
    for (x, y) in transpositions(&g) {
        let rewritten = swap_rewrite(&partial, (x, y))?;
        let kinds: &[FactorKind] = match rewritten.len() {
            0 => &[],
            1 => &[FactorKind::Lemma1Case2],
            _ => &[
                FactorKind::Lemma1Case3E2,
                FactorKind::Lemma1Case3E3,
                FactorKind::Lemma1Case3E4,
            ],
        };
        for (idem, &kind) in rewritten.into_iter().zip(kinds) {
            factors.push(Factor::idempotent(idem.into_transformation(), kind));
        }
        let swap = Permutation::transposition(a.n(), x, y)?;
        partial = partial.compose(swap.as_transformation())?;
    }
    debug_assert_eq!(partial, *a);
    Ok(Factorization {
        input: a.clone(),
        rank: a.rank(),
        factors,
    })
}
