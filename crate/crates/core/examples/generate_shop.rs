//! Generate a small synthetic shop and print what the query generator made.
//!
//! cargo run --example generate_shop

use groundsem::datagen::{
    generate_catalog, generate_query_log, generate_sessions, restrict_to_sessions, AugmentConfig,
    CatalogConfig, QueryTemplate, SessionConfig,
};

fn main() -> groundsem::Result<()> {
    let catalog = generate_catalog(
        &CatalogConfig {
            n_products: 1500,
            ..Default::default()
        },
        42,
    )?;
    let sessions = generate_sessions(
        &catalog,
        &SessionConfig {
            n_sessions: 5000,
            ..Default::default()
        },
        43,
    )?;
    let catalog = restrict_to_sessions(&catalog, &sessions)?;

    let templates = ["S", "B", "BS", "AS", "GS", "BAS"]
        .iter()
        .map(|tag| {
            let mut t = QueryTemplate::new(tag, 20)?;
            t.min_results = 3;
            t.require_filterable = true;
            Ok(t)
        })
        .collect::<groundsem::Result<Vec<_>>>()?;
    let log = generate_query_log(&catalog, &templates, &AugmentConfig::default(), 44)?;

    println!("{} products, {} sessions", catalog.len(), sessions.len());
    println!("first session: {}", sessions[0].products.join(" "));
    print!("\n{}", log.skips.to_text());
    println!();
    for r in log
        .records
        .iter()
        .filter(|r| r.pattern.tag() == "BS")
        .take(3)
    {
        let mut top: Vec<(&String, &u32)> = r.clicks.iter().collect();
        top.sort_by(|a, b| b.1.cmp(a.1));
        let shown: Vec<String> = top
            .iter()
            .take(4)
            .map(|(id, n)| format!("{id}:{n}"))
            .collect();
        println!(
            "{:<32} {} products clicked, top {}",
            r.key(),
            r.clicks.len(),
            shown.join(" ")
        );
    }
    Ok(())
}
