//! Conjugation under the symmetric group and factorizations whose factors
//! all lie in a single conjugacy class.
//!
//! Conjugation `t^g = g⁻¹∘t∘g` is a right action preserving rank and the
//! kernel class-size multiset. The functions here upgrade the idempotent
//! rewrites of [`crate::factor`]: instead of taking the canonical member of
//! each pattern, they steer a fixed idempotent `f` into the pattern by
//! conjugation, so every emitted factor is a conjugate of `f` (or of the
//! original element, for the word factorization) and carries its conjugator
//! as a checkable witness.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{decompose, swap_rewrite_patterns, transpositions};
use crate::idempotent::{Idempotent, IdempotentPattern};
use crate::transform::{Permutation, Transformation};

/// `g⁻¹∘t∘g`, written left to right.
///
/// Preserves rank and the kernel class-size multiset; conjugates of
/// idempotents are idempotent.
pub fn conjugate(t: &Transformation, g: &Permutation) -> Result<Transformation> {
    g.inverse()
        .as_transformation()
        .compose(t)?
        .compose(g.as_transformation())
}

/// A conjugate of a fixed base element, carrying the conjugating permutation
/// as a witness for class membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateFactor {
    base: Transformation,
    conjugator: Permutation,
    value: Transformation,
}

impl ConjugateFactor {
    pub fn new(base: Transformation, conjugator: Permutation) -> Result<Self> {
        let value = conjugate(&base, &conjugator)?;
        Ok(Self {
            base,
            conjugator,
            value,
        })
    }

    #[inline]
    pub fn base(&self) -> &Transformation {
        &self.base
    }

    #[inline]
    pub fn conjugator(&self) -> &Permutation {
        &self.conjugator
    }

    #[inline]
    pub fn value(&self) -> &Transformation {
        &self.value
    }

    /// Recomputes the value from the witness pair.
    pub fn verify(&self) -> bool {
        conjugate(&self.base, &self.conjugator).is_ok_and(|v| v == self.value)
    }

    /// JSON form with fixed field names and order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ConjugateFactorJson::from(self)).expect("serializable")
    }
}

#[derive(Serialize)]
struct ConjugateFactorJson {
    base: String,
    conjugator: String,
    value: String,
}

impl From<&ConjugateFactor> for ConjugateFactorJson {
    fn from(cf: &ConjugateFactor) -> Self {
        Self {
            base: cf.base.to_string(),
            conjugator: cf.conjugator.to_string(),
            value: cf.value.to_string(),
        }
    }
}

/// Left-to-right product of the values of a factor list.
pub fn product_of(factors: &[ConjugateFactor]) -> Option<Transformation> {
    let mut iter = factors.iter();
    let first = iter.next()?.value.clone();
    iter.try_fold(first, |acc, cf| acc.compose(&cf.value).ok())
}

/// Finds `g` with `f^g` matching `target`.
///
/// `target` must have exactly one entry carrying exactly one extra point,
/// and `f` must be singular with rank equal to the entry count. The
/// construction sends the representative of `f`'s smallest non-singleton
/// class to the target's extras-entry representative and that class's
/// smallest other member to the extra point; remaining representatives and
/// leftover points are matched in increasing order.
pub fn conjugator_into_pattern(
    f: &Idempotent,
    target: &IdempotentPattern,
) -> Result<Permutation> {
    let n = f.n();
    if n != target.n() {
        return Err(Error::SizeMismatch {
            left: n,
            right: target.n(),
        });
    }
    if f.rank() != target.rank() {
        return Err(Error::RankMismatch {
            expected: target.rank(),
            found: f.rank(),
        });
    }
    if !f.is_singular() {
        return Err(Error::NotSingular);
    }
    let mut special = None;
    for entry in target.entries() {
        if !entry.extras.is_empty() {
            if special.is_some() || entry.extras.len() != 1 {
                return Err(Error::InvalidPattern(
                    "expected exactly one entry with exactly one extra point".into(),
                ));
            }
            special = Some((entry.representative, entry.extras[0]));
        }
    }
    let (target_rep, target_extra) = special.ok_or_else(|| {
        Error::InvalidPattern("expected exactly one entry with exactly one extra point".into())
    })?;

    // The distinguished class of f: at least two members, smallest
    // representative.
    let (wide_class, &wide_rep) = f
        .partition()
        .classes()
        .iter()
        .zip(f.cross_section())
        .filter(|(class, _)| class.len() >= 2)
        .min_by_key(|(_, &rep)| rep)
        .expect("singular idempotent has a class with two members");
    let companion = *wide_class
        .iter()
        .find(|&&p| p != wide_rep)
        .expect("class has two members");

    let mut img = vec![0usize; n];
    let mut taken = vec![false; n];
    let send = |from: usize, to: usize, img: &mut [usize], taken: &mut [bool]| {
        img[from - 1] = to;
        taken[to - 1] = true;
    };
    send(wide_rep, target_rep, &mut img, &mut taken);
    send(companion, target_extra, &mut img, &mut taken);

    let mut source_reps: Vec<usize> = f
        .cross_section()
        .iter()
        .copied()
        .filter(|&rep| rep != wide_rep)
        .collect();
    source_reps.sort_unstable();
    let mut target_reps: Vec<usize> = target
        .representatives()
        .into_iter()
        .filter(|&rep| rep != target_rep)
        .collect();
    target_reps.sort_unstable();
    for (&from, &to) in source_reps.iter().zip(&target_reps) {
        send(from, to, &mut img, &mut taken);
    }

    let spare_domain: Vec<usize> = (1..=n).filter(|&x| img[x - 1] == 0).collect();
    let spare_codomain: Vec<usize> = (1..=n).filter(|&y| !taken[y - 1]).collect();
    for (x, y) in spare_domain.into_iter().zip(spare_codomain) {
        img[x - 1] = y;
    }
    let g = Permutation::from_images(img)?;
    debug_assert!({
        let moved = Idempotent::from_transformation(
            conjugate(f.as_transformation(), &g).expect("same domain"),
        )
        .expect("conjugate of an idempotent");
        target.matches(&moved)
    });
    Ok(g)
}

/// The class-constrained swap rewrite: the same 0/1/3 case analysis as
/// [`crate::factor::swap_rewrite`], with every factor realized as a
/// conjugate of `f`.
pub fn swap_rewrite_in_class(
    a: &Transformation,
    swap: (usize, usize),
    f: &Idempotent,
) -> Result<Vec<ConjugateFactor>> {
    if f.rank() != a.rank() {
        return Err(Error::RankMismatch {
            expected: a.rank(),
            found: f.rank(),
        });
    }
    swap_rewrite_patterns(a, swap)?
        .iter()
        .map(|pattern| {
            let g = conjugator_into_pattern(f, pattern)?;
            ConjugateFactor::new(f.as_transformation().clone(), g)
        })
        .collect()
}

/// Factors `e∘g` through conjugates of `f`, keeping the pair as given
/// rather than re-splitting the product.
pub fn factor_conjugates_pair(
    e: &Idempotent,
    g: &Permutation,
    f: &Idempotent,
) -> Result<Vec<ConjugateFactor>> {
    let mut factors = Vec::new();
    let mut partial = e.as_transformation().clone();
    for (x, y) in transpositions(g) {
        factors.extend(swap_rewrite_in_class(&partial, (x, y), f)?);
        let swap = Permutation::transposition(partial.n(), x, y)?;
        partial = partial.compose(swap.as_transformation())?;
    }
    Ok(factors)
}

/// Splits `a = e∘g` and factors the permutation tail through conjugates of
/// `f`: `e` composed with the product of the returned values equals `a`.
pub fn factor_conjugates(
    a: &Transformation,
    f: &Idempotent,
) -> Result<(Idempotent, Vec<ConjugateFactor>)> {
    if a.is_permutation() {
        return Err(Error::NotSingular);
    }
    if f.rank() != a.rank() {
        return Err(Error::RankMismatch {
            expected: a.rank(),
            found: f.rank(),
        });
    }
    let (e, g) = decompose(a);
    let factors = factor_conjugates_pair(&e, &g, f)?;
    Ok((e, factors))
}

/// Factors the sandwich `h∘e∘g` entirely into conjugates of `e`.
///
/// For a nontrivial `h` the head is handled through `e' = e^(h⁻¹)`, whose
/// own factors are rebased to `e` by composing conjugators; the tail is the
/// pair factorization of `(e, g)`. The product of the returned values equals
/// `h∘e∘g`.
pub fn segment_factor(
    h: &Permutation,
    e: &Idempotent,
    g: &Permutation,
) -> Result<Vec<ConjugateFactor>> {
    if !e.is_singular() {
        return Err(Error::NotSingular);
    }
    let base = e.as_transformation().clone();
    let mut factors = Vec::new();
    if !h.is_identity() {
        let h_inv = h.inverse();
        let moved = Idempotent::from_transformation(conjugate(&base, &h_inv)?)
            .expect("conjugate of an idempotent");
        factors.push(ConjugateFactor::new(base.clone(), h_inv.clone())?);
        for cf in factor_conjugates_pair(&moved, h, &moved)? {
            let rebased = ConjugateFactor::new(base.clone(), h_inv.compose(cf.conjugator())?)?;
            debug_assert_eq!(rebased.value(), cf.value());
            factors.push(rebased);
        }
    }
    factors.push(ConjugateFactor::new(base.clone(), Permutation::identity(e.n()))?);
    factors.extend(factor_conjugates_pair(e, g, e)?);
    debug_assert_eq!(
        product_of(&factors).expect("nonempty"),
        h.as_transformation()
            .compose(&base)
            .and_then(|t| t.compose(g.as_transformation()))
            .expect("same domain")
    );
    Ok(factors)
}

/// Expresses the idempotent seed of `a` as a product of conjugates of `a`.
///
/// With `a = e∘g` and `m` the order of `g`, the factors are
/// `a, a^g, ..., a^(g^(m-1))` and their product is `e`.
pub fn seed_idempotent_product(
    a: &Transformation,
) -> Result<(Vec<ConjugateFactor>, Idempotent)> {
    if a.is_permutation() {
        return Err(Error::NotSingular);
    }
    let (e, g) = decompose(a);
    let factors: Vec<ConjugateFactor> = (0..g.order())
        .map(|j| ConjugateFactor::new(a.clone(), g.pow(j)))
        .collect::<Result<_>>()?;
    debug_assert_eq!(
        product_of(&factors).expect("at least one factor"),
        *e.as_transformation()
    );
    Ok((factors, e))
}

/// Checks `(a∘g⁻¹)^j = a ∘ a^g ∘ ... ∘ a^(g^(j-1)) ∘ g⁻ʲ` by direct
/// expansion. Holds for every `a`, `g`, and `j >= 1` (and vacuously for
/// `j = 0`).
pub fn power_identity_check(a: &Transformation, g: &Permutation, j: usize) -> Result<bool> {
    if a.n() != g.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: g.n(),
        });
    }
    if j == 0 {
        return Ok(true);
    }
    let step = a.compose(g.inverse().as_transformation())?;
    let mut lhs = step.clone();
    for _ in 1..j {
        lhs = lhs.compose(&step)?;
    }
    let mut rhs = a.clone();
    for i in 1..j {
        rhs = rhs.compose(&conjugate(a, &g.pow(i))?)?;
    }
    let rhs = rhs.compose(g.pow(j).inverse().as_transformation())?;
    Ok(lhs == rhs)
}

/// An alternating product `g0 ∘ t ∘ g1 ∘ t ∘ ... ∘ t ∘ gr` with `r >= 1`
/// occurrences of a fixed singular element `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    base: Transformation,
    perms: Vec<Permutation>,
}

impl Word {
    /// `perms` holds the `r + 1` interleaved permutations, so it needs at
    /// least two entries.
    pub fn new(base: Transformation, perms: Vec<Permutation>) -> Result<Self> {
        if base.is_permutation() {
            return Err(Error::NotSingular);
        }
        if perms.len() < 2 {
            return Err(Error::MalformedWord(
                "need at least one occurrence of the base element".into(),
            ));
        }
        for p in &perms {
            if p.n() != base.n() {
                return Err(Error::SizeMismatch {
                    left: base.n(),
                    right: p.n(),
                });
            }
        }
        Ok(Self { base, perms })
    }

    #[inline]
    pub fn base(&self) -> &Transformation {
        &self.base
    }

    #[inline]
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// Number of occurrences of the base element.
    #[inline]
    pub fn occurrences(&self) -> usize {
        self.perms.len() - 1
    }

    /// Left-to-right evaluation; singular because the base occurs at least
    /// once.
    pub fn evaluate(&self) -> Transformation {
        let mut acc = self.perms[0].as_transformation().clone();
        for g in &self.perms[1..] {
            acc = acc
                .compose(&self.base)
                .and_then(|t| t.compose(g.as_transformation()))
                .expect("matching domains enforced at construction");
        }
        acc
    }

    /// Parses the form `"g0 | IMAGES | g1 | ... | gr"` where permutation
    /// slots use cycle notation (or image form) and every transformation
    /// slot must spell the same base element.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').map(str::trim).collect();
        if parts.len() < 3 || parts.len() % 2 == 0 {
            return Err(Error::MalformedWord(
                "expected alternating `g0 | t | g1 | ... | gr`".into(),
            ));
        }
        let mut perms = Vec::new();
        let mut base: Option<Transformation> = None;
        for (i, part) in parts.iter().enumerate() {
            if i % 2 == 0 {
                perms.push(Permutation::parse(n, part)?);
            } else {
                let t: Transformation = part.parse()?;
                if t.n() != n {
                    return Err(Error::SizeMismatch { left: t.n(), right: n });
                }
                match &base {
                    None => base = Some(t),
                    Some(prev) if *prev == t => {}
                    Some(_) => {
                        return Err(Error::MalformedWord(
                            "all transformation slots must repeat the same element".into(),
                        ))
                    }
                }
            }
        }
        Self::new(base.expect("at least one slot"), perms)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perms[0])?;
        for g in &self.perms[1..] {
            write!(f, " | {} | {}", self.base, g)?;
        }
        Ok(())
    }
}

/// Rewrites a word over `{a} ∪ Sn` as a plain product of conjugates of `a`.
///
/// Each occurrence of `a` is split as `e∘g`; the word regroups into
/// segments `h∘e∘g` (interleaved permutations attach to the following
/// segment, the trailing one to the last segment), each segment factors
/// into conjugates of `e` via [`segment_factor`], and every conjugate
/// `e^w` expands through the product of [`seed_idempotent_product`]
/// conjugated by `w`, landing in the class of `a`.
pub fn factor_word_into_conjugates(word: &Word) -> Result<Vec<ConjugateFactor>> {
    let a = word.base();
    let (e, g_a) = decompose(a);
    let expansion: Vec<Permutation> = (0..g_a.order()).map(|j| g_a.pow(j)).collect();
    let r = word.occurrences();
    let identity = Permutation::identity(a.n());
    let mut factors = Vec::new();
    for i in 1..=r {
        let head = if i == 1 {
            word.perms()[0].clone()
        } else {
            g_a.compose(&word.perms()[i - 1])?
        };
        let tail = if i == r {
            g_a.compose(&word.perms()[r])?
        } else {
            identity.clone()
        };
        for cf in segment_factor(&head, &e, &tail)? {
            for power in &expansion {
                factors.push(ConjugateFactor::new(
                    a.clone(),
                    power.compose(cf.conjugator())?,
                )?);
            }
        }
    }
    debug_assert_eq!(product_of(&factors).expect("nonempty"), word.evaluate());
    Ok(factors)
}
