//! Train prod2vec on synthetic sessions and inspect nearest neighbors.
//!
//! cargo run --release --example train_embeddings

use groundsem::datagen::{generate_catalog, generate_sessions, CatalogConfig, SessionConfig};
use groundsem::embed::{train_prod2vec, CbowHyperparams};
use groundsem::eval::describe_neighbors;

fn main() -> groundsem::Result<()> {
    let catalog = generate_catalog(
        &CatalogConfig {
            n_products: 800,
            ..Default::default()
        },
        1,
    )?;
    let sessions = generate_sessions(
        &catalog,
        &SessionConfig {
            n_sessions: 10_000,
            ..Default::default()
        },
        2,
    )?;
    let space = train_prod2vec(&sessions, &CbowHyperparams::default(), 24)?;
    println!(
        "{} products embedded in {} dimensions",
        space.len(),
        space.dim()
    );

    // The most popular product and its neighbors: mostly the same sortal.
    let top = catalog
        .products()
        .iter()
        .filter(|p| space.contains(&p.id))
        .max_by(|a, b| a.popularity.total_cmp(&b.popularity))
        .expect("non-empty");
    let exclude = std::iter::once(top.id.clone()).collect();
    let nn = space.nearest_neighbors(space.get(&top.id).unwrap(), 10, Some(&exclude))?;
    let attrs: Vec<String> = top.attributes().map(|(r, v)| format!("{r}={v}")).collect();
    println!("\nneighbors of {} ({}):", top.id, attrs.join(" "));
    print!("{}", describe_neighbors(&nn, &catalog));
    Ok(())
}
