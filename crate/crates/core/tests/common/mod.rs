#![allow(dead_code)]

use epigen_core::{Idempotent, Permutation, Transformation};
use proptest::prelude::*;

pub fn t(s: &str) -> Transformation {
    s.parse().unwrap()
}

pub fn transformation_of(n: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(1..=n, n).prop_map(|img| Transformation::from_images(img).unwrap())
}

pub fn singular_of(n: usize) -> impl Strategy<Value = Transformation> {
    transformation_of(n).prop_filter("singular", Transformation::is_singular)
}

pub fn permutation_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|img| Permutation::from_images(img).unwrap())
}

/// A uniformly shaped random idempotent of rank exactly `k`: the first `k`
/// points of a shuffle become class representatives and every remaining
/// point joins one of the classes.
pub fn idempotent_of_rank(n: usize, k: usize) -> impl Strategy<Value = Idempotent> {
    (
        Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
        prop::collection::vec(0..k, n - k),
    )
        .prop_map(move |(order, homes)| {
            let mut img = vec![0usize; n];
            for &rep in &order[..k] {
                img[rep - 1] = rep;
            }
            for (point, &home) in order[k..].iter().zip(&homes) {
                img[point - 1] = order[home];
            }
            Idempotent::from_transformation(Transformation::from_images(img).unwrap()).unwrap()
        })
}

pub fn all_singular(n: usize) -> Vec<Transformation> {
    epigen_core::oracle::all_transformations(n)
        .filter(Transformation::is_singular)
        .collect()
}

pub fn compose_all(start: &Transformation, rest: &[Transformation]) -> Transformation {
    rest.iter()
        .fold(start.clone(), |acc, x| acc.compose(x).unwrap())
}
