//! Total transformations and permutations of `[n] = {1, ..., n}`.
//!
//! All points are 1-based, matching the usual combinatorial convention, and
//! composition is written left to right: `a.compose(&b)` maps `x` to
//! `b(a(x))`, so products read the same way they are juxtaposed on paper.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A total self-map of `[n]`, stored as its image sequence.
///
/// Entry `i` of the backing vector is the image of point `i + 1`; every
/// entry lies in `1..=n`. Values are immutable once constructed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transformation {
    img: Vec<usize>,
}

impl Transformation {
    /// Builds a transformation from its 1-based image sequence.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let n = images.len();
        for &value in &images {
            if value < 1 || value > n {
                return Err(Error::ImageOutOfRange { value, n });
            }
        }
        Ok(Self { img: images })
    }

    /// The identity map on `[n]`.
    pub fn identity(n: usize) -> Self {
        Self {
            img: (1..=n).collect(),
        }
    }

    /// The constant map sending every point to `value`.
    pub fn constant(n: usize, value: usize) -> Result<Self> {
        if value < 1 || value > n {
            return Err(Error::ImageOutOfRange { value, n });
        }
        Ok(Self {
            img: vec![value; n],
        })
    }

    /// Domain size.
    #[inline]
    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// Image of a single 1-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x - 1]
    }

    /// The 1-based image sequence.
    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// Left-to-right composition: the result maps `x` to `then(self(x))`.
    pub fn compose(&self, then: &Transformation) -> Result<Transformation> {
        if self.n() != then.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: then.n(),
            });
        }
        Ok(Transformation {
            img: self.img.iter().map(|&y| then.img[y - 1]).collect(),
        })
    }

    /// Sorted list of the distinct image points.
    pub fn image(&self) -> Vec<usize> {
        let mut hit = vec![false; self.n()];
        for &y in &self.img {
            hit[y - 1] = true;
        }
        (1..=self.n()).filter(|&y| hit[y - 1]).collect()
    }

    /// Number of distinct image points.
    pub fn rank(&self) -> usize {
        let mut hit = vec![false; self.n()];
        let mut count = 0;
        for &y in &self.img {
            if !hit[y - 1] {
                hit[y - 1] = true;
                count += 1;
            }
        }
        count
    }

    /// The image together with its size.
    pub fn image_and_rank(&self) -> (Vec<usize>, usize) {
        let image = self.image();
        let rank = image.len();
        (image, rank)
    }

    /// True iff `t∘t = t`; equivalently, `t` fixes every point of its image.
    pub fn is_idempotent(&self) -> bool {
        self.img.iter().all(|&y| self.img[y - 1] == y)
    }

    /// True iff the map is a bijection.
    pub fn is_permutation(&self) -> bool {
        self.rank() == self.n()
    }

    /// True iff the map has rank strictly below `n`.
    pub fn is_singular(&self) -> bool {
        !self.is_permutation()
    }

    /// Packs the image sequence into a single word, 4 bits per point.
    ///
    /// Available for `n <= 16`; used as a compact dedup key in closure
    /// enumeration.
    #[inline]
    pub(crate) fn pack(&self) -> Option<u64> {
        if self.n() > 16 {
            return None;
        }
        let mut key = 0u64;
        for &y in &self.img {
            key = (key << 4) | (y as u64 - 1);
        }
        Some(key)
    }
}

impl fmt::Display for Transformation {
    /// Space-separated 1-based images, e.g. `"2 2 3"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, y) in self.img.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{y}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Transformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    what: "transformation",
                    text: s.to_owned(),
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        if images.is_empty() {
            return Err(Error::Parse {
                what: "transformation",
                text: s.to_owned(),
            });
        }
        Self::from_images(images)
    }
}

/// A bijective [`Transformation`], i.e. an element of the symmetric group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Transformation,
}

impl Permutation {
    /// Builds a permutation from its 1-based image sequence.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        Self::from_transformation(Transformation::from_images(images)?)
    }

    /// Checks that `t` is a bijection and wraps it.
    pub fn from_transformation(t: Transformation) -> Result<Self> {
        if !t.is_permutation() {
            return Err(Error::NotABijection);
        }
        Ok(Self { map: t })
    }

    /// The identity permutation on `[n]`.
    pub fn identity(n: usize) -> Self {
        Self {
            map: Transformation::identity(n),
        }
    }

    /// The transposition swapping the distinct points `x` and `y`.
    pub fn transposition(n: usize, x: usize, y: usize) -> Result<Self> {
        for point in [x, y] {
            if point < 1 || point > n {
                return Err(Error::PointOutOfRange { point, n });
            }
        }
        if x == y {
            return Err(Error::InvalidTransposition { x, y });
        }
        let mut img: Vec<usize> = (1..=n).collect();
        img.swap(x - 1, y - 1);
        Ok(Self {
            map: Transformation { img },
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.map.n()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }

    /// This permutation viewed as a plain transformation.
    #[inline]
    pub fn as_transformation(&self) -> &Transformation {
        &self.map
    }

    pub fn into_transformation(self) -> Transformation {
        self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.img.iter().enumerate().all(|(i, &y)| y == i + 1)
    }

    /// Left-to-right composition of permutations.
    pub fn compose(&self, then: &Permutation) -> Result<Permutation> {
        Ok(Permutation {
            map: self.map.compose(&then.map)?,
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let n = self.n();
        let mut img = vec![0usize; n];
        for (i, &y) in self.map.img.iter().enumerate() {
            img[y - 1] = i + 1;
        }
        Permutation {
            map: Transformation { img },
        }
    }

    /// `self` composed with itself `exp` times; `exp = 0` gives the identity.
    pub fn pow(&self, exp: usize) -> Permutation {
        let mut result = Permutation::identity(self.n());
        for _ in 0..exp {
            result = result.compose(self).expect("same domain");
        }
        result
    }

    /// The nontrivial cycles, each listed from its minimal point, ordered by
    /// minimal point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next - 1] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// The least `m >= 1` with `g^m = identity`: the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, cycle| lcm(acc, cycle.len()))
    }

    /// The inverse together with the order.
    pub fn inverse_and_order(&self) -> (Permutation, usize) {
        (self.inverse(), self.order())
    }

    /// Parses either cycle notation (`"(1 2)(3 4)"`, identity `"()"`) or a
    /// space-separated image sequence. Cycle input must consist of disjoint
    /// cycles; repeated or out-of-range points are rejected.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let text = s.trim();
        if text.starts_with('(') {
            Self::parse_cycles(n, text)
        } else {
            let t: Transformation = text.parse()?;
            if t.n() != n {
                return Err(Error::SizeMismatch { left: t.n(), right: n });
            }
            Self::from_transformation(t)
        }
    }

    fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "permutation",
            text: text.to_owned(),
        };
        let mut img: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let points = body
                .split_whitespace()
                .map(|tok| tok.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<usize>>>()?;
            if points.is_empty() {
                // "()" denotes the identity; nothing to record.
                continue;
            }
            for &point in &points {
                if point < 1 || point > n {
                    return Err(Error::PointOutOfRange { point, n });
                }
                if used[point - 1] {
                    return Err(Error::NotABijection);
                }
                used[point - 1] = true;
            }
            for (i, &point) in points.iter().enumerate() {
                img[point - 1] = points[(i + 1) % points.len()];
            }
        }
        Self::from_images(img)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, point) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{point}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Transformation {
        s.parse().unwrap()
    }

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    // Independent pointwise evaluation, kept separate from `compose`.
    fn eval_then(a: &Transformation, b: &Transformation, x: usize) -> usize {
        b.apply(a.apply(x))
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = t("2 2 3");
        let b = t("1 1 3");
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, t("1 1 3"));
        for x in 1..=3 {
            assert_eq!(ab.apply(x), eval_then(&a, &b, x));
        }
    }

    #[test]
    fn compose_with_identity() {
        let a = t("2 2 3");
        assert_eq!(a.compose(&Transformation::identity(3)).unwrap(), a);
        assert_eq!(Transformation::identity(3).compose(&a).unwrap(), a);
    }

    #[test]
    fn compose_can_drop_rank() {
        let a = t("1 2 2");
        let b = t("2 2 3");
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, t("2 2 2"));
        assert_eq!(a.rank(), 2);
        assert_eq!(ab.rank(), 1);
    }

    #[test]
    fn compose_rejects_size_mismatch() {
        let a = t("2 2 3");
        let b = t("1 1");
        assert_eq!(
            a.compose(&b),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn image_and_rank_examples() {
        assert_eq!(t("2 2 3").image_and_rank(), (vec![2, 3], 2));
        assert_eq!(
            Transformation::identity(3).image_and_rank(),
            (vec![1, 2, 3], 3)
        );
        assert_eq!(t("1 1 1").image_and_rank(), (vec![1], 1));
    }

    #[test]
    fn idempotency_examples() {
        assert!(t("2 2 3").is_idempotent());
        assert!(Transformation::identity(3).is_idempotent());
        assert!(!t("2 1 3").is_idempotent());
        let swap = t("2 1 3");
        assert_eq!(swap.compose(&swap).unwrap(), Transformation::identity(3));
    }

    #[test]
    fn idempotent_iff_fixes_image() {
        for img in [
            vec![1, 1, 2],
            vec![2, 2, 3],
            vec![3, 1, 2],
            vec![1, 1, 1],
            vec![2, 3, 1],
        ] {
            let a = Transformation::from_images(img).unwrap();
            let fixes = a.image().iter().all(|&y| a.apply(y) == y);
            assert_eq!(a.is_idempotent(), fixes, "{a}");
            assert_eq!(a.is_idempotent(), a.compose(&a).unwrap() == a, "{a}");
        }
    }

    #[test]
    fn rank_counts_kernel_classes() {
        for img in [vec![1, 1, 2], vec![2, 2, 3], vec![1, 1, 1]] {
            let a = Transformation::from_images(img).unwrap();
            assert_eq!(a.kernel().class_count(), a.rank());
        }
    }

    #[test]
    fn inverse_and_order_examples() {
        let three_cycle = p(3, "(1 2 3)");
        assert_eq!(three_cycle.as_transformation(), &t("2 3 1"));
        let (inv, order) = three_cycle.inverse_and_order();
        assert_eq!(inv.as_transformation(), &t("3 1 2"));
        assert_eq!(order, 3);

        let (inv, order) = Permutation::identity(3).inverse_and_order();
        assert!(inv.is_identity());
        assert_eq!(order, 1);

        let swap = p(3, "(1 2)");
        let (inv, order) = swap.inverse_and_order();
        assert_eq!(inv, swap);
        assert_eq!(order, 2);
    }

    #[test]
    fn order_is_minimal() {
        // Brute-force minimality, independent of the cycle-lcm computation.
        for g in [p(4, "(1 2 3)"), p(4, "(1 2)(3 4)"), p(4, "(1 2 3 4)")] {
            let m = g.order();
            assert!(g.pow(m).is_identity());
            for j in 1..m {
                assert!(!g.pow(j).is_identity(), "{g} has a smaller power");
            }
        }
    }

    #[test]
    fn transposition_construction() {
        let swap = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(swap.as_transformation(), &t("2 1 3"));
        assert_eq!(
            Permutation::transposition(3, 2, 2),
            Err(Error::InvalidTransposition { x: 2, y: 2 })
        );
        assert_eq!(
            Permutation::transposition(3, 1, 4),
            Err(Error::PointOutOfRange { point: 4, n: 3 })
        );
    }

    #[test]
    fn transformation_text_roundtrip() {
        for s in ["2 2 3", "1 1 1", "1 2 3 4", "4 1 2 2"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!("".parse::<Transformation>().is_err());
        assert!("1 2 x".parse::<Transformation>().is_err());
        assert!("0 1".parse::<Transformation>().is_err());
        assert!("1 4 2".parse::<Transformation>().is_err());
    }

    #[test]
    fn permutation_parse_both_forms() {
        assert_eq!(p(4, "(1 2)(3 4)").as_transformation(), &t("2 1 4 3"));
        assert_eq!(p(3, "()").as_transformation(), &t("1 2 3"));
        assert_eq!(p(3, "2 3 1"), p(3, "(1 2 3)"));
        assert_eq!(p(5, "(2 4)").as_transformation(), &t("1 4 3 2 5"));
    }

    #[test]
    fn permutation_display_is_cycle_form() {
        assert_eq!(p(4, "2 1 4 3").to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p(3, "(1 3 2)").to_string(), "(1 3 2)");
    }

    #[test]
    fn permutation_parse_rejects_bad_cycles() {
        assert!(Permutation::parse(3, "(1 1)").is_err());
        assert!(Permutation::parse(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse(3, "(1 5)").is_err());
        assert!(Permutation::parse(3, "(1 2").is_err());
        assert!(Permutation::parse(3, "2 2 3").is_err());
        assert!(Permutation::parse(3, "1 2").is_err());
    }

    #[test]
    fn rank_composition_bounds() {
        let a = t("1 2 2 4");
        let b = t("2 2 3 1");
        let ab = a.compose(&b).unwrap();
        assert!(ab.rank() <= a.rank().min(b.rank()));

        let g = p(4, "(1 4 2)");
        let ag = a.compose(g.as_transformation()).unwrap();
        assert_eq!(ag.rank(), a.rank());
        let mapped: Vec<usize> = {
            let mut v: Vec<usize> = a.image().iter().map(|&y| g.apply(y)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(ag.image(), mapped);
    }
}
