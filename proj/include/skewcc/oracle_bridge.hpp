#pragma once

#include "skewcc/codes.hpp"
#include "skewcc/oracle.hpp"

namespace skewcc {

/// Conversions from the construction types to the oracle's raw-word world.
/// Only data moves across this boundary; the oracle recomputes everything
/// from scratch.

oracle::Layout oracle_layout(const Code& code);

/// Oracle-side symbol twist matching an automorphism tag.
oracle::Twist oracle_twist(const Autom& autom);

/// The action of x on codeword words: the constacyclic shift with the
/// code's automorphism and unit.
oracle::ShiftSpec oracle_step(const Code& code);

/// Flattened word of the generator reduced mod x^n - alpha.
oracle::Word oracle_seed(const Code& code);

/// Full enumeration of the code's words (2^20 cap).
oracle::CodewordSet enumerate_code_words(const Code& code);

/// Enumeration of the submodule generated by an arbitrary polynomial under
/// the code's ambient action (length, automorphism, unit). Used to compare
/// <f> against the code itself, e.g. for idempotent generators.
oracle::CodewordSet enumerate_generated_words(const Code& code, const SkewPoly& f);

/// Enumeration of the (i,j) component code over F_q as an n x 1 x 1
/// layout. Needs a componentwise automorphism.
oracle::CodewordSet enumerate_component_words(const Code& code, std::size_t i, std::size_t j);

}  // namespace skewcc
