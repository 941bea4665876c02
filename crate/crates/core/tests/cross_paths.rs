//! The counting routes checked against each other.

use chorddia::group_algebra::generate_group;
use chorddia::numbers::matchings;
use chorddia::oracle::{self, OracleConfig};
use chorddia::*;
use num_bigint::BigUint;
use num_rational::BigRational;

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[test]
fn burnside_matches_closed_forms() {
    for n in 1..=20u64 {
        let points = 2 * n as usize;
        let c = make_standard_group(GroupKind::Cyclic, points).unwrap();
        let d = make_standard_group(GroupKind::Dihedral, points).unwrap();
        assert_eq!(burnside_count(n as usize, &c).unwrap(), cyclic_count(n).unwrap(), "n={n}");
        assert_eq!(burnside_count(n as usize, &d).unwrap(), dihedral_count(n).unwrap(), "n={n}");
    }
}

#[test]
fn wreath_distribution_matches_psi() {
    for n in 1..=12u64 {
        let dist = wreath_cycle_type_distribution(n as usize);
        for i in divisors(2 * n).unwrap() {
            let ct = CycleType::from_pairs([(i as usize, (2 * n / i) as usize)]).unwrap();
            assert_eq!(dist.count(&ct), psi(n, i).unwrap(), "n={n} i={i}");
        }
        let mut refl = vec![(2usize, n as usize - 1)];
        refl.push((1, 2));
        let ct = CycleType::from_pairs(refl).unwrap();
        assert_eq!(dist.count(&ct), psi_reflection(n).unwrap(), "n={n}");
    }
}

#[test]
fn closed_forms_match_oracle() {
    let cfg = OracleConfig::default().with_threads(threads());
    for n in 1..=7usize {
        let c = make_standard_group(GroupKind::Cyclic, 2 * n).unwrap();
        let d = make_standard_group(GroupKind::Dihedral, 2 * n).unwrap();
        let id = make_standard_group(GroupKind::Identity, 2 * n).unwrap();
        assert_eq!(oracle::orbit_count(n, &c, &cfg).unwrap().orbit_count, cyclic_count(n as u64).unwrap());
        assert_eq!(oracle::orbit_count(n, &d, &cfg).unwrap().orbit_count, dihedral_count(n as u64).unwrap());
        assert_eq!(oracle::orbit_count(n, &id, &cfg).unwrap().orbit_count, matchings(n as u64));
    }
}

#[test]
fn nu_counts_rotation_fixed_points() {
    let cfg = OracleConfig::default();
    for n in 1..=6usize {
        for s in 0..2 * n {
            let g = GroupElement::rotation(2 * n, s).unwrap();
            assert_eq!(
                oracle::fixed_diagram_count(n, &g, &cfg).unwrap(),
                nu(n as u64, g.order() as u64).unwrap(),
                "n={n} shift={s}"
            );
        }
    }
}

#[test]
fn burnside_handles_groups_off_the_circle() {
    // Groups that do not preserve the circle: a transposition, a product of
    // two disjoint 3-cycles, and the full S_6.
    let cfg = OracleConfig::default();
    let swap = GroupElement::from_one_based(&[2, 1, 3, 4, 5, 6]).unwrap();
    let triple = GroupElement::from_one_based(&[2, 3, 1, 5, 6, 4]).unwrap();
    let long = GroupElement::from_one_based(&[2, 3, 4, 5, 6, 1]).unwrap();
    let groups = [
        generate_group(std::slice::from_ref(&swap), 6).unwrap(),
        generate_group(std::slice::from_ref(&triple), 6).unwrap(),
        generate_group(&[swap.clone(), triple], 6).unwrap(),
        generate_group(&[swap, long], 6).unwrap(),
    ];
    for g in &groups {
        let brute = oracle::orbit_count(3, g, &cfg).unwrap();
        assert_eq!(burnside_count(3, g).unwrap(), brute.orbit_count, "group of order {}", g.order());
    }
    // S_6 acts transitively on the 15 matchings.
    assert_eq!(groups[3].order(), 720);
    assert_eq!(burnside_count(3, &groups[3]).unwrap(), BigUint::from(1u32));

    let gens = [
        GroupElement::from_one_based(&[1, 2, 4, 3, 6, 5, 8, 7]).unwrap(),
        GroupElement::rotation(8, 2).unwrap(),
    ];
    let g = generate_group(&gens, 8).unwrap();
    assert_eq!(
        burnside_count(4, &g).unwrap(),
        oracle::orbit_count(4, &g, &cfg).unwrap().orbit_count
    );
}

#[test]
fn touchard_matches_crossing_distribution() {
    let cfg = OracleConfig::default().with_threads(threads());
    for n in 1..=7 {
        assert_eq!(
            touchard_polynomial(n as u64).unwrap(),
            oracle::crossing_distribution(n, &cfg).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn strict_sequences_match_oracle() {
    let cfg = OracleConfig::default().with_threads(threads());
    let seq = hk_sequences(7).unwrap();
    for n in 1..=7 {
        assert_eq!(seq.strict(n).unwrap(), &oracle::strict_count(n, &cfg).unwrap(), "n={n}");
    }
}

#[test]
fn noncrossing_diagrams_are_catalan() {
    for n in 1..=7usize {
        let count = all_diagrams(n).filter(|d| crossings(d) == 0).count();
        assert_eq!(BigUint::from(count), catalan_noncrossing(n as u64).unwrap());
    }
}

#[test]
fn small_orbit_fraction_shrinks() {
    let cfg = OracleConfig::default().with_threads(threads());
    let mut previous: Option<BigRational> = None;
    for n in 3..=8usize {
        let c = make_standard_group(GroupKind::Cyclic, 2 * n).unwrap();
        let summary = oracle::orbit_count(n, &c, &cfg).unwrap();
        let small: BigUint = summary
            .orbit_size_histogram
            .iter()
            .filter(|(&size, _)| size < 2 * n)
            .map(|(&size, count)| count * size)
            .sum();
        let fraction = BigRational::new(small.into(), matchings(n as u64).into());
        if let Some(prev) = &previous {
            assert!(&fraction < prev, "n={n}: {fraction} !< {prev}");
        }
        previous = Some(fraction);
    }
}
