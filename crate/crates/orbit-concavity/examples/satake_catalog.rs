//! Enumerate the catalog of simple real forms and export it as JSON.

use orbit_concavity::satake::catalog;

fn main() {
    let cat = catalog(4);
    println!("catalog up to rank 4: {} entries", cat.len());
    for d in &cat {
        println!(
            "  {:<12} [{:<7}] base {}{}  black {:?}  arrows {:?}  dim_k {}",
            d.name,
            d.type_label(),
            d.base_letter.as_str(),
            d.base_rank,
            d.black.iter().map(|i| i + 1).collect::<Vec<_>>(),
            d.arrows.iter().map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>(),
            d.dim_k
        );
    }
    let entries: Vec<_> = cat.iter().map(|d| d.to_json_entry()).collect();
    println!("{}", serde_json::to_string_pretty(&entries[..3]).unwrap());
}
