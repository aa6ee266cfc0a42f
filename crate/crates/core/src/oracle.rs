//! Exhaustive ground truth at small degree: enumeration of transformations,
//! permutations, and idempotents; generated-subsemigroup closure by
//! breadth-first products with witness links; word search; and
//! whole-theorem verification.
//!
//! Everything here is deterministic: generators are sorted lexicographically
//! by image sequence, members are kept in discovery order, and witnesses are
//! chosen by first discovery, so repeated runs produce identical sets,
//! witnesses, and JSON.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::conjugacy::{conjugate, Word};
use crate::error::{Error, Result};
use crate::factor::decompose;
use crate::idempotent::{Idempotent, KernelPartition};
use crate::transform::{Permutation, Transformation};

/// Default refusal bound for exhaustive enumeration (8^8 ≈ 1.7·10^7
/// potential elements); override through [`Oracle::with_max_n`].
pub const DEFAULT_MAX_N: usize = 8;

/// A deduplicated set of transformations in discovery order, optionally with
/// the generator products that witnessed each member.
#[derive(Clone, Debug)]
pub struct ElementSet {
    n: usize,
    members: Vec<Transformation>,
    index: MemberIndex,
    generators: Vec<Transformation>,
    /// For closure-produced sets: `parents[i]` is `None` for a generator and
    /// `Some((predecessor, generator index))` otherwise.
    parents: Option<Vec<Option<(usize, usize)>>>,
}

impl PartialEq for ElementSet {
    /// Equality of the member sequences; discovery order is part of the
    /// determinism contract.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.members == other.members
    }
}

impl Eq for ElementSet {}

#[derive(Clone, Debug)]
enum MemberIndex {
    Packed(HashMap<u64, usize>),
    General(HashMap<Transformation, usize>),
}

impl MemberIndex {
    fn new(n: usize) -> Self {
        if n <= 16 {
            MemberIndex::Packed(HashMap::new())
        } else {
            MemberIndex::General(HashMap::new())
        }
    }

    fn get(&self, t: &Transformation) -> Option<usize> {
        match self {
            MemberIndex::Packed(map) => map.get(&t.pack().expect("n <= 16")).copied(),
            MemberIndex::General(map) => map.get(t).copied(),
        }
    }

    fn insert(&mut self, t: &Transformation, at: usize) -> bool {
        match self {
            MemberIndex::Packed(map) => map.insert(t.pack().expect("n <= 16"), at).is_none(),
            MemberIndex::General(map) => map.insert(t.clone(), at).is_none(),
        }
    }
}

impl ElementSet {
    fn from_members(n: usize, members: Vec<Transformation>) -> Self {
        let mut index = MemberIndex::new(n);
        for (i, t) in members.iter().enumerate() {
            let fresh = index.insert(t, i);
            debug_assert!(fresh, "members must be deduplicated");
        }
        Self {
            n,
            members,
            index,
            generators: Vec::new(),
            parents: None,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in discovery order.
    #[inline]
    pub fn members(&self) -> &[Transformation] {
        &self.members
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        t.n() == self.n && self.index.get(t).is_some()
    }

    pub fn position(&self, t: &Transformation) -> Option<usize> {
        if t.n() != self.n {
            return None;
        }
        self.index.get(t)
    }

    /// Generators used to build this set, when produced by closure.
    pub fn generators(&self) -> &[Transformation] {
        &self.generators
    }

    /// Reconstructs `t` as a product of generators, as generator indices,
    /// when this set carries witness links.
    pub fn witness(&self, t: &Transformation) -> Option<Vec<usize>> {
        let parents = self.parents.as_ref()?;
        let mut at = self.position(t)?;
        let mut word = Vec::new();
        while let Some((predecessor, generator)) = parents[at] {
            word.push(generator);
            at = predecessor;
        }
        // Roots are the generators themselves, inserted first in order.
        word.push(at);
        word.reverse();
        Some(word)
    }

    /// True iff both sets hold exactly the same members, in any order.
    pub fn same_members(&self, other: &ElementSet) -> bool {
        self.n == other.n
            && self.len() == other.len()
            && self.members.iter().all(|t| other.contains(t))
    }

    /// JSON form with fixed field names and order, members in discovery
    /// order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ElementSetJson::from(self)).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&ElementSetJson::from(self)).expect("serializable")
    }
}

#[derive(Serialize)]
struct ElementSetJson {
    n: usize,
    size: usize,
    members: Vec<String>,
}

impl From<&ElementSet> for ElementSetJson {
    fn from(set: &ElementSet) -> Self {
        Self {
            n: set.n,
            size: set.len(),
            members: set.members.iter().map(Transformation::to_string).collect(),
        }
    }
}

/// All transformations of `[n]` in lexicographic image order.
pub fn all_transformations(n: usize) -> impl Iterator<Item = Transformation> {
    (1..=n)
        .map(|_| 1..=n)
        .multi_cartesian_product()
        .map(|img| Transformation::from_images(img).expect("entries in range"))
}

/// All permutations of `[n]` in lexicographic image order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|img| Permutation::from_images(img).expect("bijection"))
        .collect()
}

/// Enumeration and closure routines guarded by a domain-size bound.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    max_n: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl Oracle {
    /// Overrides the default domain-size refusal bound.
    pub fn with_max_n(max_n: usize) -> Self {
        Self { max_n }
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        if n > self.max_n {
            return Err(Error::DomainTooLarge {
                n,
                max_n: self.max_n,
            });
        }
        Ok(())
    }

    /// All idempotents of rank exactly `k`, each generated once by iterating
    /// partitions of `[n]` into `k` classes and, per class, every choice of
    /// representative.
    pub fn enumerate_idempotents(&self, n: usize, k: usize) -> Result<ElementSet> {
        self.check_n(n)?;
        if k < 1 || k > n {
            return Err(Error::RankOutOfRange { k, n });
        }
        let mut members = Vec::new();
        for classes in partitions_into(n, k) {
            let partition = KernelPartition::new(n, classes)?;
            let sizes: Vec<usize> = partition.classes().iter().map(Vec::len).collect();
            let mut choice = vec![0usize; k];
            loop {
                let cross_section: Vec<usize> = partition
                    .classes()
                    .iter()
                    .zip(&choice)
                    .map(|(class, &c)| class[c])
                    .collect();
                let idem = Idempotent::from_partition(partition.clone(), cross_section)?;
                members.push(idem.into_transformation());
                // Mixed-radix increment over the representative choices.
                let mut digit = k;
                loop {
                    if digit == 0 {
                        break;
                    }
                    digit -= 1;
                    choice[digit] += 1;
                    if choice[digit] < sizes[digit] {
                        break;
                    }
                    choice[digit] = 0;
                }
                if choice.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }
        Ok(ElementSet::from_members(n, members))
    }

    /// The rank filtration set `{t : rank(t) <= k}`, which is a two-sided
    /// ideal of the singular part since composition cannot raise rank; the
    /// ideal property is checked exhaustively for `n <= 4`.
    pub fn ideal_elements(&self, n: usize, k: usize) -> Result<ElementSet> {
        self.check_n(n)?;
        if k < 1 || k >= n {
            return Err(Error::RankOutOfRange { k, n });
        }
        let members: Vec<Transformation> =
            all_transformations(n).filter(|t| t.rank() <= k).collect();
        let set = ElementSet::from_members(n, members);
        if n <= 4 {
            let singular: Vec<Transformation> =
                all_transformations(n).filter(Transformation::is_singular).collect();
            for t in set.members() {
                for s in &singular {
                    assert!(set.contains(&s.compose(t)?));
                    assert!(set.contains(&t.compose(s)?));
                }
            }
        }
        Ok(set)
    }

    /// The conjugacy class `{t^g : g ∈ Sn}`, deduplicated in the discovery
    /// order given by lexicographic iteration over the conjugators.
    pub fn conjugacy_class(&self, t: &Transformation) -> Result<ElementSet> {
        self.check_n(t.n())?;
        let mut members = Vec::new();
        let mut index = MemberIndex::new(t.n());
        for g in all_permutations(t.n()) {
            let moved = conjugate(t, &g)?;
            if index.get(&moved).is_none() {
                index.insert(&moved, members.len());
                members.push(moved);
            }
        }
        Ok(ElementSet::from_members(t.n(), members))
    }

    /// The smallest subsemigroup containing `generators`, computed by
    /// breadth-first right-multiplication with deduplication.
    ///
    /// Members are recorded in discovery order with witness links back to
    /// the generators; repeated runs are byte-identical.
    pub fn closure(&self, generators: &[Transformation]) -> Result<ElementSet> {
        Ok(self.closure_searching(generators, None)?.0)
    }

    fn closure_searching(
        &self,
        generators: &[Transformation],
        target: Option<&Transformation>,
    ) -> Result<(ElementSet, Option<usize>)> {
        let Some(first) = generators.first() else {
            return Err(Error::EmptyGenerators);
        };
        let n = first.n();
        self.check_n(n)?;
        for g in generators {
            if g.n() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: g.n(),
                });
            }
        }
        let gens: Vec<Transformation> = generators
            .iter()
            .cloned()
            .sorted()
            .dedup()
            .collect();

        let mut members: Vec<Transformation> = Vec::new();
        let mut parents: Vec<Option<(usize, usize)>> = Vec::new();
        let mut index = MemberIndex::new(n);
        let mut found = None;
        for (i, g) in gens.iter().enumerate() {
            index.insert(g, i);
            members.push(g.clone());
            parents.push(None);
            if found.is_none() && target.is_some_and(|t| t == g) {
                found = Some(i);
            }
        }

        let mut cursor = 0;
        while cursor < members.len() && (target.is_none() || found.is_none()) {
            for (gi, g) in gens.iter().enumerate() {
                let product = members[cursor].compose(g)?;
                if index.get(&product).is_none() {
                    index.insert(&product, members.len());
                    if found.is_none() && target.is_some_and(|t| *t == product) {
                        found = Some(members.len());
                    }
                    members.push(product);
                    parents.push(Some((cursor, gi)));
                }
            }
            cursor += 1;
        }

        let set = ElementSet {
            n,
            members,
            index,
            generators: gens,
            parents: Some(parents),
        };
        Ok((set, found))
    }

    /// Searches breadth-first for a word over `{a} ∪ Sn` evaluating to
    /// `target`, normalized to the alternating permutation/base form.
    ///
    /// Non-membership is reported only once the search space is exhausted.
    pub fn find_word(&self, target: &Transformation, a: &Transformation) -> Result<Word> {
        if a.is_permutation() || target.is_permutation() {
            return Err(Error::NotSingular);
        }
        if target.n() != a.n() {
            return Err(Error::SizeMismatch {
                left: target.n(),
                right: a.n(),
            });
        }
        let n = a.n();
        self.check_n(n)?;
        let mut generators: Vec<Transformation> = all_permutations(n)
            .into_iter()
            .map(Permutation::into_transformation)
            .collect();
        generators.push(a.clone());
        let (set, found) = self.closure_searching(&generators, Some(target))?;
        let Some(at) = found else {
            return Err(Error::NotAMember);
        };
        let letters = set
            .witness(&set.members()[at])
            .expect("closure sets carry witnesses");

        // Collapse permutation runs; the base letters delimit the word.
        let mut perms = Vec::new();
        let mut run = Permutation::identity(n);
        for letter in letters {
            let value = &set.generators()[letter];
            if value == a {
                perms.push(run);
                run = Permutation::identity(n);
            } else {
                let g = Permutation::from_transformation(value.clone())
                    .expect("non-base generators are permutations");
                run = run.compose(&g)?;
            }
        }
        perms.push(run);
        let word = Word::new(a.clone(), perms)?;
        debug_assert_eq!(word.evaluate(), *target);
        Ok(word)
    }

    /// Checks that, for every `k < n`, the rank filtration set is exactly
    /// the closure of its own idempotents, cumulatively and rank by rank:
    /// the closure of the idempotents of rank `<= k` equals
    /// `{t : rank(t) <= k}`, and every element of rank exactly `k` already
    /// lies in the closure of the rank-`k` idempotents.
    pub fn verify_theorem2(&self, n: usize) -> Result<bool> {
        self.check_n(n)?;
        let mut cumulative: Vec<Transformation> = Vec::new();
        for k in 1..n {
            let exact = self.enumerate_idempotents(n, k)?;
            let per_rank_closure = self.closure(exact.members())?;
            cumulative.extend(exact.members().iter().cloned());
            let ideal = self.ideal_elements(n, k)?;
            for t in ideal.members() {
                if t.rank() == k && !per_rank_closure.contains(t) {
                    return Ok(false);
                }
            }
            let cumulative_closure = self.closure(&cumulative)?;
            if !cumulative_closure.same_members(&ideal) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks the three-way set equality for a singular `a` with seed
    /// idempotent `e`: the closures of the conjugacy classes of `a` and of
    /// `e` both equal the singular part of the subsemigroup generated by
    /// `{a} ∪ Sn`.
    pub fn verify_theorem5(&self, n: usize, a: &Transformation) -> Result<bool> {
        if a.n() != n {
            return Err(Error::SizeMismatch {
                left: a.n(),
                right: n,
            });
        }
        if a.is_permutation() {
            return Err(Error::NotSingular);
        }
        self.check_n(n)?;
        let class_closure = self.closure(self.conjugacy_class(a)?.members())?;
        let (e, _) = decompose(a);
        let seed_closure = self.closure(self.conjugacy_class(e.as_transformation())?.members())?;
        let mut generators: Vec<Transformation> = all_permutations(n)
            .into_iter()
            .map(Permutation::into_transformation)
            .collect();
        generators.push(a.clone());
        let mixed = self.closure(&generators)?;
        let singular_part = ElementSet::from_members(
            n,
            mixed
                .members()
                .iter()
                .filter(|t| t.is_singular())
                .cloned()
                .collect(),
        );
        Ok(class_closure.same_members(&seed_closure)
            && class_closure.same_members(&singular_part))
    }
}

/// All partitions of `[n]` into exactly `k` nonempty classes, classes
/// ordered by first appearance (hence by minimal element), enumerated in
/// restricted-growth order.
fn partitions_into(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    fn recurse(
        point: usize,
        used: usize,
        n: usize,
        k: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if point == n {
            if used == k {
                let mut classes = vec![Vec::new(); k];
                for (i, &block) in assignment.iter().enumerate() {
                    classes[block].push(i + 1);
                }
                out.push(classes);
            }
            return;
        }
        // Not enough points left to open the remaining blocks.
        if k - used > n - point {
            return;
        }
        for block in 0..used.min(k) {
            assignment[point] = block;
            recurse(point + 1, used, n, k, assignment, out);
        }
        if used < k {
            assignment[point] = used;
            recurse(point + 1, used + 1, n, k, assignment, out);
        }
    }
    recurse(0, 0, n, k, &mut assignment, &mut out);
    out
}

/// Convenience wrappers using the default domain-size bound.
pub fn enumerate_idempotents(n: usize, k: usize) -> Result<ElementSet> {
    Oracle::default().enumerate_idempotents(n, k)
}

pub fn ideal_elements(n: usize, k: usize) -> Result<ElementSet> {
    Oracle::default().ideal_elements(n, k)
}

pub fn conjugacy_class(t: &Transformation) -> Result<ElementSet> {
    Oracle::default().conjugacy_class(t)
}

pub fn closure(generators: &[Transformation]) -> Result<ElementSet> {
    Oracle::default().closure(generators)
}

pub fn find_word(target: &Transformation, a: &Transformation) -> Result<Word> {
    Oracle::default().find_word(target, a)
}

pub fn verify_theorem2(n: usize) -> Result<bool> {
    Oracle::default().verify_theorem2(n)
}

pub fn verify_theorem5(n: usize, a: &Transformation) -> Result<bool> {
    Oracle::default().verify_theorem5(n, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Transformation {
        s.parse().unwrap()
    }

    fn members_sorted(set: &ElementSet) -> Vec<Transformation> {
        let mut v = set.members().to_vec();
        v.sort();
        v
    }

    #[test]
    fn idempotent_enumeration_examples() {
        let full_rank = enumerate_idempotents(3, 3).unwrap();
        assert_eq!(full_rank.members(), &[Transformation::identity(3)]);

        let constants = enumerate_idempotents(3, 1).unwrap();
        assert_eq!(
            members_sorted(&constants),
            vec![t("1 1 1"), t("2 2 2"), t("3 3 3")]
        );

        let rank2 = enumerate_idempotents(3, 2).unwrap();
        assert_eq!(
            members_sorted(&rank2),
            vec![
                t("1 1 3"),
                t("1 2 1"),
                t("1 2 2"),
                t("1 3 3"),
                t("2 2 3"),
                t("3 2 3")
            ]
        );
    }

    #[test]
    fn idempotent_enumeration_matches_brute_force() {
        for n in 1..=4 {
            for k in 1..=n {
                let enumerated = enumerate_idempotents(n, k).unwrap();
                let filtered: Vec<Transformation> = all_transformations(n)
                    .filter(|x| x.is_idempotent() && x.rank() == k)
                    .collect();
                assert_eq!(enumerated.len(), filtered.len(), "n={n} k={k}");
                assert!(filtered.iter().all(|x| enumerated.contains(x)));
            }
        }
    }

    #[test]
    fn idempotent_enumeration_rejects_bad_rank() {
        assert!(matches!(
            enumerate_idempotents(3, 0),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            enumerate_idempotents(3, 4),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn ideal_examples() {
        assert_eq!(ideal_elements(3, 1).unwrap().len(), 3);
        assert_eq!(ideal_elements(3, 2).unwrap().len(), 21);
        assert_eq!(ideal_elements(2, 1).unwrap().len(), 2);
        assert!(matches!(
            ideal_elements(3, 3),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            ideal_elements(3, 0),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn closure_of_single_idempotent() {
        let set = closure(&[t("2 2 3")]).unwrap();
        assert_eq!(set.members(), &[t("2 2 3")]);
    }

    #[test]
    fn closure_of_rank2_idempotents_covers_rank2_maps() {
        let generators = enumerate_idempotents(3, 2).unwrap();
        let set = closure(generators.members()).unwrap();
        let rank2: Vec<Transformation> =
            all_transformations(3).filter(|x| x.rank() == 2).collect();
        assert_eq!(rank2.len(), 18);
        assert!(rank2.iter().all(|x| set.contains(x)));
    }

    #[test]
    fn closure_generates_symmetric_group() {
        let set = closure(&[t("2 1 3"), t("2 3 1")]).unwrap();
        assert_eq!(set.len(), 6);
        assert!(set.members().iter().all(Transformation::is_permutation));
    }

    #[test]
    fn closure_input_validation() {
        assert_eq!(closure(&[]), Err(Error::EmptyGenerators));
        assert_eq!(
            closure(&[t("1 2"), t("1 2 3")]),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
        let big = Transformation::identity(9);
        assert_eq!(
            closure(&[big.clone()]),
            Err(Error::DomainTooLarge { n: 9, max_n: 8 })
        );
        let relaxed = Oracle::with_max_n(9).closure(&[big]).unwrap();
        assert_eq!(relaxed.len(), 1);
    }

    #[test]
    fn closure_is_idempotent_operator() {
        let generators = [t("2 2 3"), t("1 3 1")];
        let once = closure(&generators).unwrap();
        let twice = closure(once.members()).unwrap();
        assert!(once.same_members(&twice));
    }

    #[test]
    fn closure_witnesses_reevaluate() {
        let generators = [t("2 2 3"), t("2 3 1"), t("1 1 1")];
        let set = closure(&generators).unwrap();
        for member in set.members() {
            let letters = set.witness(member).unwrap();
            let mut product: Option<Transformation> = None;
            for letter in letters {
                let g = &set.generators()[letter];
                product = Some(match product {
                    None => g.clone(),
                    Some(acc) => acc.compose(g).unwrap(),
                });
            }
            assert_eq!(product.unwrap(), *member);
        }
    }

    #[test]
    fn conjugacy_class_examples() {
        let of_identity = conjugacy_class(&Transformation::identity(3)).unwrap();
        assert_eq!(of_identity.members(), &[Transformation::identity(3)]);

        let class = conjugacy_class(&t("1 1 3")).unwrap();
        assert_eq!(
            members_sorted(&class),
            vec![
                t("1 1 3"),
                t("1 2 1"),
                t("1 2 2"),
                t("1 3 3"),
                t("2 2 3"),
                t("3 2 3")
            ]
        );

        let constants = conjugacy_class(&t("1 1 1")).unwrap();
        assert_eq!(
            members_sorted(&constants),
            vec![t("1 1 1"), t("2 2 2"), t("3 3 3")]
        );
    }

    #[test]
    fn conjugacy_class_preserves_invariants() {
        let a = t("2 2 3 5 5");
        let class = conjugacy_class(&a).unwrap();
        // Orbit size divides the group order.
        assert_eq!(120 % class.len(), 0);
        for member in class.members() {
            assert_eq!(member.rank(), a.rank());
            assert_eq!(
                member.kernel().class_size_multiset(),
                a.kernel().class_size_multiset()
            );
        }
    }

    #[test]
    fn find_word_returns_trivial_word_for_base() {
        let a = t("2 2 3");
        let word = find_word(&a, &a).unwrap();
        assert_eq!(word.occurrences(), 1);
        assert!(word.perms().iter().all(Permutation::is_identity));
        assert_eq!(word.evaluate(), a);
    }

    #[test]
    fn find_word_reaches_members() {
        let a = t("2 2 3");
        for target in [t("1 1 3"), t("1 1 1"), t("3 1 1")] {
            let word = find_word(&target, &a).unwrap();
            assert_eq!(word.evaluate(), target, "word {word}");
            assert_eq!(word.base(), &a);
        }
    }

    #[test]
    fn find_word_reports_nonmembers() {
        // Rank cannot grow, so no word over a constant reaches rank 2.
        assert_eq!(find_word(&t("1 1 3"), &t("1 1 1")), Err(Error::NotAMember));
        assert_eq!(find_word(&t("2 1 3"), &t("1 1 3")), Err(Error::NotSingular));
        assert_eq!(find_word(&t("1 1 3"), &t("2 1 3")), Err(Error::NotSingular));
    }

    #[test]
    fn theorem2_holds_at_small_degrees() {
        assert!(verify_theorem2(2).unwrap());
        assert!(verify_theorem2(3).unwrap());
    }

    #[test]
    fn theorem5_examples() {
        assert!(verify_theorem5(3, &t("2 2 3")).unwrap());
        assert!(verify_theorem5(3, &t("1 1 1")).unwrap());
        assert!(verify_theorem5(4, &t("2 2 3 4")).unwrap());
        assert_eq!(
            verify_theorem5(3, &t("2 3 1")),
            Err(Error::NotSingular)
        );
    }

    #[test]
    fn element_set_json_is_deterministic() {
        let set = enumerate_idempotents(3, 2).unwrap();
        assert_eq!(
            set.to_json_string(),
            "{\"n\":3,\"size\":6,\"members\":[\"1 1 3\",\"2 2 3\",\"1 2 1\",\
             \"3 2 3\",\"1 2 2\",\"1 3 3\"]}"
        );
    }

    #[test]
    fn partitions_respect_block_count() {
        // Stirling numbers S(4, k): 1, 7, 6, 1.
        assert_eq!(partitions_into(4, 1).len(), 1);
        assert_eq!(partitions_into(4, 2).len(), 7);
        assert_eq!(partitions_into(4, 3).len(), 6);
        assert_eq!(partitions_into(4, 4).len(), 1);
    }
}
