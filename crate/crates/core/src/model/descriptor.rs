//! JDT-style method signature descriptors for unresolved source types.
//!
//! `void main(String[] args)` encodes as `([QString;)V`.

use crate::frontend::{MethodDecl, TypeRef};

fn primitive_code(name: &str) -> Option<char> {
    Some(match name {
        "int" => 'I',
        "void" => 'V',
        "boolean" => 'Z',
        "byte" => 'B',
        "char" => 'C',
        "short" => 'S',
        "long" => 'J',
        "float" => 'F',
        "double" => 'D',
        _ => return None,
    })
}

pub fn encode_type(ty: &TypeRef) -> String {
    let mut out = "[".repeat(ty.array_dims as usize);
    match primitive_code(&ty.base_name) {
        Some(code) if ty.is_primitive => out.push(code),
        _ => {
            out.push('Q');
            out.push_str(&ty.base_name);
            out.push(';');
        }
    }
    out
}

pub fn encode_signature(method: &MethodDecl) -> String {
    let mut out = String::from("(");
    for p in &method.params {
        out.push_str(&encode_type(&p.ty));
    }
    out.push(')');
    out.push_str(&encode_type(&method.return_type));
    out
}
