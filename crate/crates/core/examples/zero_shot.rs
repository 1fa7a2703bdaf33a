//! Zero-shot composition through the staged pipeline: train on two-term
//! queries, test on BAS, GAS and BGAS. Artifacts go to a temporary directory.
//!
//! cargo run --release --example zero_shot

use groundsem::pipeline::{Pipeline, PipelineConfig, Task, NEIGHBORS_FILE};

fn main() -> groundsem::Result<()> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/desk.toml");
    let mut cfg = PipelineConfig::load(&path)?;
    cfg.out_dir = std::env::temp_dir().join("groundsem-zero-shot");
    cfg.eval.tasks = vec![Task::Zt];
    let pipeline = Pipeline::new(cfg)?;

    let (stages, reports) = pipeline.cmd_all()?;
    for s in &stages[..4] {
        println!("[{}] {}", s.stage.command(), s.summary);
    }
    println!();
    print!("{}", reports[0].to_table());

    let neighbors = std::fs::read_to_string(stages[4].dir.join(NEIGHBORS_FILE)).unwrap_or_default();
    println!(
        "\n{}",
        neighbors
            .lines()
            .skip(1)
            .take(24)
            .collect::<Vec<_>>()
            .join("\n")
    );
    Ok(())
}
