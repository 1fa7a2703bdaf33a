//! DeepSet denotations: click-weighted means of product embeddings.
//!
//! cargo run --example deepsets

use std::collections::BTreeMap;

use groundsem::denote::build_deepset;
use groundsem::embed::EmbeddingSpace;

fn main() -> groundsem::Result<()> {
    let space = EmbeddingSpace::new(
        2,
        vec![
            ("trail_shoe".into(), vec![1.0, 0.0]),
            ("road_shoe".into(), vec![0.8, 0.2]),
            ("tennis_shirt".into(), vec![0.0, 1.0]),
        ],
    )?;
    let shoes: BTreeMap<String, u32> = [
        ("trail_shoe".to_string(), 30),
        ("road_shoe".to_string(), 10),
    ]
    .into();
    let ds = build_deepset(&shoes, &space)?;
    println!("\"shoes\" = {:?} from {:?}", ds.vector, ds.support);

    // Ten times the clicks, same proportions: the same denotation.
    let scaled: BTreeMap<String, u32> = shoes.iter().map(|(k, v)| (k.clone(), v * 10)).collect();
    assert_eq!(build_deepset(&scaled, &space)?.vector, ds.vector);

    for n in space.nearest_neighbors(&ds.vector, 3, None)? {
        println!("  {:<13} {:.4}", n.id, n.score);
    }
    Ok(())
}
