mod common;

use common::{binomial_se, chi_square_critical, chi_square_uniform};
use num_traits::ToPrimitive;
use secretary_core::permutation::{contains_fast, contains_reference, for_each_permutation};
use secretary_core::{
    catalan, dyck_to_321, enumerate_avoiding, enumerate_dyck, max_position_law, sample_avoiding,
    sample_avoiding_by_position_law, sample_dyck, sample_low, sample_low_with, sample_uniform,
    LowCompletion, Pattern, Permutation, RandomSource,
};

#[test]
fn uniform_sampler_chi_square_n6() {
    let mut all = Vec::new();
    for_each_permutation(6, |s| all.push(Permutation::new(s.to_vec()).unwrap()));
    assert_eq!(all.len(), 720);
    let mut rng = RandomSource::new(2024);
    let (stat, _) = chi_square_uniform(&all, (0..132_000).map(|_| sample_uniform(6, &mut rng)));
    assert!(stat < chi_square_critical(719), "chi2 = {stat}");
}

#[test]
fn dyck_sampler_small_cases() {
    let mut rng = RandomSource::new(17);
    let paths = enumerate_dyck(2);
    let trials = 100_000u64;
    let up_up = (0..trials)
        .filter(|_| sample_dyck(2, &mut rng) == paths[0])
        .count() as f64
        / trials as f64;
    assert!((up_up - 0.5).abs() <= 3.0 * binomial_se(0.5, trials), "freq {up_up}");
}

#[test]
fn dyck_sampler_chi_square_n6() {
    let paths = enumerate_dyck(6);
    assert_eq!(paths.len(), 132);
    let mut rng = RandomSource::new(606);
    let (stat, _) = chi_square_uniform(&paths, (0..132_000).map(|_| sample_dyck(6, &mut rng)));
    assert!(stat < chi_square_critical(131), "chi2 = {stat}");
}

#[test]
fn avoiding_samplers_chi_square_n4_to_6() {
    for eta in Pattern::ALL {
        for n in 4..=6 {
            let class = enumerate_avoiding(n, eta).unwrap();
            let draws = 1000 * class.len();
            let mut rng = RandomSource::for_stream(31, &[n as u64]);
            let (stat, _) =
                chi_square_uniform(&class, (0..draws).map(|_| sample_avoiding(n, eta, &mut rng)));
            let critical = chi_square_critical(class.len() - 1);
            assert!(stat < critical, "{eta} n={n}: chi2 = {stat} >= {critical}");
        }
    }
}

#[test]
fn position_law_sampler_chi_square_n6() {
    for eta in [Pattern::P231, Pattern::P132] {
        let class = enumerate_avoiding(6, eta).unwrap();
        let mut rng = RandomSource::new(4242);
        let (stat, _) = chi_square_uniform(
            &class,
            (0..132_000).map(|_| sample_avoiding_by_position_law(6, eta, &mut rng)),
        );
        assert!(stat < chi_square_critical(131), "{eta}: chi2 = {stat}");
    }
}

#[test]
fn n3_231_hits_312_one_fifth_of_the_time() {
    let target = Permutation::new(vec![3, 1, 2]).unwrap();
    let trials = 100_000u64;
    let mut rng = RandomSource::new(3);
    let hits = (0..trials)
        .filter(|_| sample_avoiding(3, Pattern::P231, &mut rng) == target)
        .count() as f64
        / trials as f64;
    assert!((hits - 0.2).abs() <= 3.0 * binomial_se(0.2, trials), "freq {hits}");
}

#[test]
fn samples_at_n100_avoid_their_pattern() {
    for eta in Pattern::ALL {
        let mut rng = RandomSource::for_stream(100, &[eta.to_string().parse().unwrap()]);
        for _ in 0..10_000 {
            let sigma = sample_avoiding(100, eta, &mut rng);
            assert_eq!(sigma.len(), 100);
            assert!(sigma.avoids(eta), "{eta}: {sigma}");
        }
    }
}

#[test]
fn peak_bijection_images_of_random_paths_avoid_321() {
    let mut rng = RandomSource::new(321);
    for _ in 0..10_000 {
        assert!(dyck_to_321(&sample_dyck(100, &mut rng)).avoids(Pattern::P321));
    }
}

#[test]
fn peak_bijection_is_onto_the_321_class() {
    for n in 1..=7 {
        let mut image: Vec<Permutation> = enumerate_dyck(n).iter().map(dyck_to_321).collect();
        image.sort();
        let before = image.len();
        image.dedup();
        assert_eq!(image.len(), before);
        assert_eq!(image, enumerate_avoiding(n, Pattern::P321).unwrap());
    }
}

#[test]
fn position_of_maximum_follows_catalan_law_n8() {
    let n = 8;
    let law: Vec<f64> = max_position_law(n, Pattern::P231)
        .unwrap()
        .iter()
        .map(|p| p.to_f64().unwrap())
        .collect();
    let trials = 200_000u64;
    for (label, by_law) in [("dyck", false), ("position-law", true)] {
        let mut rng = RandomSource::new(88);
        let mut counts = vec![0u64; n];
        for _ in 0..trials {
            let sigma = if by_law {
                sample_avoiding_by_position_law(n, Pattern::P231, &mut rng)
            } else {
                sample_avoiding(n, Pattern::P231, &mut rng)
            };
            counts[sigma.position_of(n as u32).unwrap() - 1] += 1;
        }
        for j in 0..n {
            let freq = counts[j] as f64 / trials as f64;
            let se = binomial_se(law[j], trials);
            assert!((freq - law[j]).abs() <= 4.0 * se, "{label} j={}: {freq} vs {}", j + 1, law[j]);
        }
    }
}

#[test]
fn low_sampler_places_maximum_uniformly() {
    let trials = 100_000u64;
    for completion in [LowCompletion::Increasing, LowCompletion::Decreasing] {
        let mut rng = RandomSource::new(44);
        let mut counts = [0u64; 4];
        for _ in 0..trials {
            let sigma = sample_low_with(4, completion, &mut rng);
            let j = sigma.position_of(4).unwrap();
            assert!(sigma.entries()[..j - 1].windows(2).all(|w| w[0] < w[1]));
            counts[j - 1] += 1;
        }
        for c in counts {
            let freq = c as f64 / trials as f64;
            assert!((freq - 0.25).abs() <= 3.0 * binomial_se(0.25, trials), "freq {freq}");
        }
    }
    assert_eq!(sample_low(1, &mut RandomSource::new(0)).entries(), &[1]);
}

#[test]
fn symmetric_patterns_share_draws() {
    for seed in 0..200u64 {
        let n = 1 + (seed as usize % 40);
        let base = sample_avoiding(n, Pattern::P231, &mut RandomSource::new(seed));
        assert_eq!(base.complement(), sample_avoiding(n, Pattern::P213, &mut RandomSource::new(seed)));
    }
}

#[test]
fn fast_containment_matches_reference_on_random_permutations() {
    let mut rng = RandomSource::new(50);
    for i in 0..100_000u64 {
        let n = 1 + (i % 50) as usize;
        let sigma = sample_uniform(n, &mut rng);
        for eta in Pattern::ALL {
            assert_eq!(
                contains_fast(sigma.entries(), eta),
                contains_reference(sigma.entries(), &eta.entries()),
                "{eta} {sigma}"
            );
        }
    }
}

#[test]
fn dyck_path_count_is_catalan() {
    assert_eq!(catalan(7).to_usize().unwrap(), enumerate_dyck(7).len());
}
