#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use adomian::reduced::ReducedPolynomial;
use adomian::Rational;

pub type TermSet = Vec<(Vec<(usize, usize)>, Rational)>;

pub const LISTINGS: &str = include_str!("../fixtures/adomian_listings.txt");

/// Partitions of `m` into exactly `k` parts, by `p(m,k) = p(m-1,k-1) + p(m-k,k)`.
pub fn partitions_exact(m: usize, k: usize) -> u128 {
    fn go(m: usize, k: usize, memo: &mut HashMap<(usize, usize), u128>) -> u128 {
        if m == 0 && k == 0 {
            return 1;
        }
        if m == 0 || k == 0 || k > m {
            return 0;
        }
        if let Some(&v) = memo.get(&(m, k)) {
            return v;
        }
        let v = go(m - 1, k - 1, memo) + go(m - k, k, memo);
        memo.insert((m, k), v);
        v
    }
    go(m, k, &mut HashMap::new())
}

/// Unrestricted partition number `p(m)`.
pub fn partitions_total(m: usize) -> u128 {
    (1..=m).map(|k| partitions_exact(m, k)).sum()
}

pub fn term_set(z: &ReducedPolynomial) -> TermSet {
    let mut v: TermSet = z
        .terms()
        .iter()
        .map(|t| (t.exponents().entries().to_vec(), t.coefficient().clone()))
        .collect();
    v.sort();
    v
}

fn parse_term(s: &str) -> (Vec<(usize, usize)>, Rational) {
    let mut coeff = Rational::from_integer(1.into());
    let mut exps: BTreeMap<usize, usize> = BTreeMap::new();
    for tok in s.split_whitespace() {
        if let Some(rest) = tok.strip_prefix('u') {
            let (i, e) = match rest.split_once('^') {
                Some((i, e)) => (i.parse().unwrap(), e.parse().unwrap()),
                None => (rest.parse().unwrap(), 1),
            };
            *exps.entry(i).or_default() += e;
        } else {
            coeff = tok.parse().expect("coefficient");
        }
    }
    (exps.into_iter().collect(), coeff)
}

/// `(m, k) -> term set` transcribed from the published listings; `A_0` is
/// recorded under `(0, 0)` with an empty set.
pub fn listings() -> BTreeMap<(usize, usize), TermSet> {
    let mut out = BTreeMap::new();
    for line in LISTINGS.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, body) = line.split_once(':').expect("A<m> <k>: ...");
        let mut head = head.split_whitespace();
        let m: usize = head.next().unwrap().trim_start_matches('A').parse().unwrap();
        let k: usize = head.next().unwrap().parse().unwrap();
        if m == 0 {
            assert_eq!(body.trim(), "F(u0)");
            out.insert((0, 0), Vec::new());
            continue;
        }
        let mut terms: TermSet = body.split('+').map(parse_term).collect();
        terms.sort();
        out.insert((m, k), terms);
    }
    out
}

/// The displayed general-`a` pendulum series: for each even degree `n`, the
/// `t^n` coefficient is `b^{n/2} Σ (p/q) sin(j a)`.
/// `(p, q, j)` stands for `(p/q) sin(j a)`.
pub type SineTerm = (i128, i128, u32);

pub const GENERAL_SERIES: &[(usize, &[SineTerm])] = &[
    (2, &[(-1, 2, 1)]),
    // cos(a) sin(a) / 24 = sin(2a) / 48
    (4, &[(1, 48, 2)]),
    (6, &[(1, 360, 1), (-1, 720, 3)]),
    (8, &[(-1, 5040, 2), (17, 161280, 4)]),
    (10, &[(-1, 45360, 1), (13, 604800, 3), (-31, 3628800, 5)]),
    (12, &[(37, 17107200, 2), (-37, 17107200, 4), (691, 958003200, 6)]),
    (
        14,
        &[
            (73, 340540200, 1),
            (-1, 3439800, 3),
            (9557, 43589145600, 5),
            (-5461, 87178291200, 7),
        ],
    ),
    (
        16,
        &[
            (-313, 12573792000, 2),
            (37, 1067489280, 4),
            (-9683, 435891456000, 6),
            (929569, 167382319104000, 8),
        ],
    ),
    (
        18,
        &[
            (-47, 20415732480, 1),
            (381779, 100037089152000, 3),
            (-816337, 200074178304000, 5),
            (1441031, 640237370572800, 7),
            (-3202291, 6402373705728000, 9),
        ],
    ),
    (
        20,
        &[
            (1884343, 6335682312960000, 2),
            (-540809, 1055947052160000, 4),
            (31786477, 67580611338240000, 6),
            (-138706613, 608225502044160000, 8),
            (221930581, 4865804016353280000, 10),
        ],
    ),
];

/// Floating value of the displayed `t^n` coefficient at `(a, b)`.
pub fn general_coefficient(n: usize, a: f64, b: f64) -> Option<f64> {
    GENERAL_SERIES.iter().find(|(d, _)| *d == n).map(|(_, terms)| {
        let s: f64 = terms
            .iter()
            .map(|&(p, q, j)| p as f64 / q as f64 * (j as f64 * a).sin())
            .sum();
        s * b.powi((n / 2) as i32)
    })
}

/// Sum of `|p/q|` over the displayed terms, used to scale tolerances.
pub fn general_magnitude(n: usize) -> f64 {
    GENERAL_SERIES
        .iter()
        .find(|(d, _)| *d == n)
        .map(|(_, terms)| terms.iter().map(|&(p, q, _)| (p as f64 / q as f64).abs()).sum())
        .unwrap_or(0.0)
}
