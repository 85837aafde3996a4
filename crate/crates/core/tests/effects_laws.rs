//! Effect-logic suite on random inputs: negation probabilities, and/or
//! additivity, independence under product structure.

use approx::assert_abs_diff_eq;
use qalg::random::{random_density_matrix, random_effect, rng_from_seed};
use qalg::{
    and_or, is_independent, probability, relative_frequency, AlgebraContext, Effect, Ensemble,
    Event, Quantity,
};

#[test]
fn negation_probability_on_random_pairs() {
    let mut rng = rng_from_seed(307);
    let ctx = AlgebraContext::matrix(3);
    for _ in 0..40 {
        let ensemble = Ensemble::density(random_density_matrix(3, &mut rng)).unwrap();
        let e = Effect::new(random_effect(ctx, &mut rng)).unwrap();
        let p = probability(&ensemble, &e).unwrap();
        assert!((-1e-10..=1.0 + 1e-10).contains(&p));
        assert_abs_diff_eq!(
            probability(&ensemble, &e.negate()).unwrap(),
            1.0 - p,
            epsilon = 1e-10
        );
    }
}

#[test]
fn and_or_are_effects_with_additive_probabilities() {
    let mut rng = rng_from_seed(311);
    for _ in 0..40 {
        // commuting pair: random diagonal effects under a random weighted law
        let n = 4usize;
        let weights: Vec<f64> = (0..n)
            .map(|_| rand::Rng::gen_range(&mut rng, 0.05..1.0))
            .collect();
        let ensemble = Ensemble::weighted(&weights).unwrap();
        let sample = |rng: &mut qalg::random::SeededRng| -> Effect {
            let entries: Vec<f64> = (0..n)
                .map(|_| rand::Rng::gen_range(&mut *rng, 0.0..1.0))
                .collect();
            Effect::new(Quantity::diagonal_re(&entries).unwrap()).unwrap()
        };
        let e = sample(&mut rng);
        let f = sample(&mut rng);
        let (and, or) = and_or(&e, &f).unwrap();
        let sum = probability(&ensemble, &and).unwrap() + probability(&ensemble, &or).unwrap();
        let parts = probability(&ensemble, &e).unwrap() + probability(&ensemble, &f).unwrap();
        assert_abs_diff_eq!(sum, parts, epsilon = 1e-10);
    }
}

#[test]
fn slot_events_are_independent_with_product_probability() {
    let mut rng = rng_from_seed(313);
    for _ in 0..20 {
        let a = Ensemble::density(random_density_matrix(2, &mut rng)).unwrap();
        let b = Ensemble::density(random_density_matrix(2, &mut rng)).unwrap();
        let product = a.tensor(&b).unwrap();

        let e_base = Quantity::matrix_re(2, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        let one2 = Quantity::identity(AlgebraContext::matrix(2));
        let e = Event::new(e_base.kron(&one2).unwrap()).unwrap();
        let f = Event::new(one2.kron(&e_base).unwrap()).unwrap();

        assert!(is_independent(&product, e.effect(), f.effect()).unwrap());
        let (and, _) = and_or(e.effect(), f.effect()).unwrap();
        let joint = probability(&product, &and).unwrap();
        let separate = probability(&product, e.effect()).unwrap()
            * probability(&product, f.effect()).unwrap();
        assert_abs_diff_eq!(joint, separate, epsilon = 1e-10);
    }
}

#[test]
fn relative_frequency_of_random_events_follows_the_law() {
    let mut rng = rng_from_seed(317);
    for _ in 0..10 {
        let ensemble = Ensemble::density(random_density_matrix(2, &mut rng)).unwrap();
        let psi = qalg::random::random_unit_vector(2, &mut rng);
        let event = Event::elementary(&psi).unwrap();
        let p = probability(&ensemble, event.effect()).unwrap();
        for copies in 1..=6 {
            let (q, sigma) = relative_frequency(&ensemble, event.effect(), copies).unwrap();
            assert_abs_diff_eq!(q, p, epsilon = 1e-10);
            assert_abs_diff_eq!(
                sigma,
                (p * (1.0 - p) / copies as f64).sqrt(),
                epsilon = 1e-10
            );
        }
    }
}
