//! nDCG@k and Jaccard@k over neighbor lists.
//!
//! cargo run --example metrics

use groundsem::eval::{jaccard_at_k, ndcg_at_k};

fn main() -> groundsem::Result<()> {
    let truth = ["p1", "p2"];
    let pred = ["p1", "p3", "p2"];
    println!("nDCG@3    {:.4}", ndcg_at_k(&pred, &truth, 3)?);

    let a = ["a", "b", "c"];
    let b = ["b", "c", "d"];
    println!("Jaccard@3 {:.4}", jaccard_at_k(&a, &b, 3)?);
    // Jaccard is symmetric; nDCG depends on which list is the prediction.
    println!(
        "nDCG@3 a|b {:.4}  b|a {:.4}",
        ndcg_at_k(&a, &b, 3)?,
        ndcg_at_k(&b, &a, 3)?
    );

    match jaccard_at_k(&a, &b, 4) {
        Err(e) => println!("k = 4: {e}"),
        Ok(v) => println!("k = 4: {v}"),
    }
    Ok(())
}
