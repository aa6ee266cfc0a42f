//! Kernel partitions, idempotents, and idempotent patterns.
//!
//! An idempotent `e` is determined by a partition `P` of `[n]` together with
//! a cross-section `C` (one point per class): every class is sent to its
//! chosen point. A pattern is the set-valued version of that description: it
//! pins the image points and, per class, any further points the class must
//! contain, leaving the rest of the partition free.

use std::fmt;

use crate::error::{Error, Result};
use crate::transform::Transformation;

/// A partition of `[n]` into the fibers of a transformation.
///
/// Classes are kept in canonical form: each class sorted ascending, classes
/// ordered by their minimal element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KernelPartition {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl KernelPartition {
    /// Builds a partition from its classes, which must be disjoint, nonempty,
    /// and cover `[n]`.
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidPattern("empty class".into()));
            }
            for &point in class {
                if point < 1 || point > n {
                    return Err(Error::PointOutOfRange { point, n });
                }
                if seen[point - 1] {
                    return Err(Error::InvalidPattern(format!(
                        "point {point} appears in two classes"
                    )));
                }
                seen[point - 1] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidPattern("classes do not cover [n]".into()));
        }
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut class| {
                class.sort_unstable();
                class
            })
            .collect();
        classes.sort_unstable_by_key(|class| class[0]);
        Ok(Self { n, classes })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// The class containing `x`.
    pub fn class_of(&self, x: usize) -> &[usize] {
        self.classes
            .iter()
            .find(|class| class.contains(&x))
            .expect("point within [n]")
    }

    /// Class sizes in descending order; invariant under conjugation.
    pub fn class_size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

impl fmt::Debug for KernelPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.classes).finish()
    }
}

impl Transformation {
    /// The partition of `[n]` into fibers of this map; one class per image
    /// point, so the class count equals the rank.
    pub fn kernel(&self) -> KernelPartition {
        let n = self.n();
        let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 1..=n {
            fibers[self.apply(x) - 1].push(x);
        }
        let classes: Vec<Vec<usize>> = fibers.into_iter().filter(|f| !f.is_empty()).collect();
        KernelPartition::new(n, classes).expect("fibers partition [n]")
    }
}

/// An idempotent transformation together with its defining pair: the kernel
/// partition and the cross-section it fixes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Idempotent {
    map: Transformation,
    partition: KernelPartition,
    cross_section: Vec<usize>,
}

impl Idempotent {
    /// Builds the idempotent sending each class of `partition` to the chosen
    /// cross-section point. `cross_section[i]` must lie in class `i`.
    pub fn from_partition(partition: KernelPartition, cross_section: Vec<usize>) -> Result<Self> {
        if cross_section.len() != partition.class_count() {
            return Err(Error::InvalidCrossSection(format!(
                "{} points for {} classes",
                cross_section.len(),
                partition.class_count()
            )));
        }
        let mut img = vec![0usize; partition.n()];
        for (class, &rep) in partition.classes().iter().zip(&cross_section) {
            if !class.contains(&rep) {
                return Err(Error::InvalidCrossSection(format!(
                    "representative {rep} not in its class"
                )));
            }
            for &point in class {
                img[point - 1] = rep;
            }
        }
        let map = Transformation::from_images(img)?;
        debug_assert!(map.is_idempotent());
        Ok(Self {
            map,
            partition,
            cross_section,
        })
    }

    /// Checks that `t` is idempotent and recovers its `(partition,
    /// cross-section)` description.
    pub fn from_transformation(t: Transformation) -> Result<Self> {
        if !t.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        let partition = t.kernel();
        let cross_section: Vec<usize> = partition
            .classes()
            .iter()
            .map(|class| t.apply(class[0]))
            .collect();
        Ok(Self {
            map: t,
            partition,
            cross_section,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.map.n()
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.cross_section.len()
    }

    #[inline]
    pub fn as_transformation(&self) -> &Transformation {
        &self.map
    }

    pub fn into_transformation(self) -> Transformation {
        self.map
    }

    #[inline]
    pub fn partition(&self) -> &KernelPartition {
        &self.partition
    }

    /// Image points, listed per class in class order.
    #[inline]
    pub fn cross_section(&self) -> &[usize] {
        &self.cross_section
    }

    pub fn is_singular(&self) -> bool {
        self.rank() < self.n()
    }
}

impl fmt::Display for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.map, f)
    }
}

impl fmt::Debug for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.map)
    }
}

/// One entry of an [`IdempotentPattern`]: an image point plus any further
/// points its class is required to contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEntry {
    pub representative: usize,
    pub extras: Vec<usize>,
}

impl PatternEntry {
    pub fn new(representative: usize, extras: Vec<usize>) -> Self {
        let mut extras = extras;
        extras.sort_unstable();
        Self {
            representative,
            extras,
        }
    }
}

/// A set of idempotents described by required image points and required
/// class members.
///
/// An idempotent `e` matches when its image is exactly the entry
/// representatives and, for each entry, the class of the representative
/// contains the entry's extra points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentPattern {
    n: usize,
    entries: Vec<PatternEntry>,
}

impl IdempotentPattern {
    /// Validates that all mentioned points are distinct and in range.
    pub fn new(n: usize, entries: Vec<PatternEntry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidPattern("no entries".into()));
        }
        let mut seen = vec![false; n];
        for entry in &entries {
            for &point in std::iter::once(&entry.representative).chain(&entry.extras) {
                if point < 1 || point > n {
                    return Err(Error::PointOutOfRange { point, n });
                }
                if seen[point - 1] {
                    return Err(Error::InvalidPattern(format!(
                        "point {point} mentioned twice"
                    )));
                }
                seen[point - 1] = true;
            }
        }
        Ok(Self { n, entries })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entries(&self) -> &[PatternEntry] {
        &self.entries
    }

    /// Number of entries, i.e. the rank of every matching idempotent.
    #[inline]
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.representative).collect()
    }

    /// True iff `e` has image exactly the representatives and each
    /// representative's class contains that entry's extras.
    pub fn matches(&self, e: &Idempotent) -> bool {
        if e.n() != self.n || e.rank() != self.entries.len() {
            return false;
        }
        let mut reps = self.representatives();
        reps.sort_unstable();
        if e.as_transformation().image() != reps {
            return false;
        }
        self.entries.iter().all(|entry| {
            let class = e.partition().class_of(entry.representative);
            entry.extras.iter().all(|extra| class.contains(extra))
        })
    }

    /// The canonical matching idempotent: each entry's mentioned points form
    /// one class, and every unmentioned point joins the class of the smallest
    /// representative value.
    pub fn canonical(&self) -> Idempotent {
        let mut classes: Vec<Vec<usize>> = self
            .entries
            .iter()
            .map(|entry| {
                let mut class = entry.extras.clone();
                class.push(entry.representative);
                class
            })
            .collect();
        let smallest = self
            .entries
            .iter()
            .enumerate()
            .min_by_key(|(_, entry)| entry.representative)
            .map(|(i, _)| i)
            .expect("pattern has entries");
        let mut mentioned = vec![false; self.n];
        for class in &classes {
            for &point in class {
                mentioned[point - 1] = true;
            }
        }
        for point in 1..=self.n {
            if !mentioned[point - 1] {
                classes[smallest].push(point);
            }
        }
        let cross_section: Vec<(usize, usize)> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, entry)| (classes[i].iter().copied().min().unwrap(), entry.representative))
            .collect();
        let partition =
            KernelPartition::new(self.n, classes).expect("pattern points partition [n]");
        // KernelPartition reorders classes by minimal element; realign the
        // cross-section with it.
        let mut by_min = cross_section;
        by_min.sort_unstable_by_key(|&(min, _)| min);
        let reps: Vec<usize> = by_min.into_iter().map(|(_, rep)| rep).collect();
        Idempotent::from_partition(partition, reps).expect("canonical member is valid")
    }
}
