//! Leave-one-brand-out on the desk-scale config, entirely in memory.
//!
//! cargo run --release --example lobo

use groundsem::compose::ModelKind;
use groundsem::datagen::{
    filter_queries, generate_catalog, generate_query_log, generate_sessions, restrict_to_sessions,
};
use groundsem::denote::build_lexicon;
use groundsem::embed::train_prod2vec;
use groundsem::eval::{composition_pairs, run_experiment, top_brands, Contender, Experiment};
use groundsem::pipeline::PipelineConfig;

fn main() -> groundsem::Result<()> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/desk.toml");
    let cfg = PipelineConfig::load(&path)?;
    let d = &cfg.datagen;

    let catalog = generate_catalog(&d.catalog, d.seed)?;
    let sessions = generate_sessions(&catalog, &d.sessions, d.seed + 1)?;
    let catalog = restrict_to_sessions(&catalog, &sessions)?;
    let log = generate_query_log(&catalog, &d.templates, &d.augment, d.seed + 2)?;
    let space = train_prod2vec(&sessions, &cfg.embed.cbow, cfg.embed.dim)?;
    let lexicon = build_lexicon(&filter_queries(&log.records, &space), &space)?;
    let (pairs, _) = composition_pairs(&lexicon)?;

    let brands = top_brands(&pairs, 3);
    let (exp, dropped) = Experiment::lobo(&pairs, &brands)?;
    println!(
        "holding out {} ({} pairs dropped for unseen sortals)",
        brands.join(", "),
        dropped.len()
    );
    let contenders = [
        Contender::Model(ModelKind::Adm),
        Contender::Model(ModelKind::Mdm),
        Contender::Random,
    ];
    let mut eval = cfg.eval.eval_config();
    eval.n_runs = 5;
    let report = run_experiment(
        &exp,
        &contenders,
        &space,
        &eval,
        &cfg.compose.train,
        &[1, 2, 3, 4, 5],
    )?;
    print!("{}", report.to_table());
    Ok(())
}
