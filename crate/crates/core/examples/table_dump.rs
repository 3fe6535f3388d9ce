//! Dumps a table of constants and reads it back.

use schubert_lr::cli::{format_table, parse_table, write_table};
use schubert_lr::shapes::AmbientSpace;

fn main() -> schubert_lr::error::Result<()> {
    let space: AmbientSpace = "C:n=3".parse()?;
    let mut buf = Vec::new();
    write_table(&space, true, &mut buf)?;
    let text = String::from_utf8(buf).expect("utf-8");
    let records = parse_table(&text)?;
    assert_eq!(format_table(&records), text);
    print!("{text}");
    println!("{} nonzero constants", records.len());
    Ok(())
}
