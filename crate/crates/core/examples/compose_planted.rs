//! Recover a planted matrix composition `M·u + N·v` with the MDM model and
//! compare it with the additive and MLP baselines.
//!
//! cargo run --release --example compose_planted

use groundsem::compose::{batch_loss, train, ModelKind, QueryParse, TrainConfig, TrainingPair};
use groundsem::linalg::{add, Matrix};
use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};

fn main() -> groundsem::Result<()> {
    let d = 8;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let m = Matrix::random_normal(d, d, 0.35, &mut rng);
    let n = Matrix::random_normal(d, d, 0.35, &mut rng);
    let mut pairs = Vec::new();
    for _ in 0..600 {
        let u: Vec<f64> = (0..d).map(|_| StandardNormal.sample(&mut rng)).collect();
        let v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(&mut rng)).collect();
        pairs.push(TrainingPair {
            tokens: Vec::new(),
            pattern: "BS".into(),
            target: add(&m.mul_vec(&u), &n.mul_vec(&v)),
            parse: QueryParse::from_vectors(vec![u, v])?,
        });
    }
    let (train_set, held_out) = pairs.split_at(500);
    let held_out: Vec<&TrainingPair> = held_out.iter().collect();
    let cfg = TrainConfig {
        learning_rate: 1e-2,
        max_epochs: 2000,
        patience: 50,
        batch_size: 50,
        ..Default::default()
    };

    for kind in [ModelKind::Adm, ModelKind::Mdm, ModelKind::Mlp] {
        let (model, report) = train(kind, d, train_set, &cfg)?;
        println!(
            "{:<4} held-out MSE {:>10.3e}  (best epoch {}, {} epochs run)",
            kind.label(),
            batch_loss(&model, &held_out),
            report.best_epoch,
            report.epochs.len()
        );
    }
    Ok(())
}
