#pragma once

#include <string>
#include <string_view>

#include "gaussnorm/norms.hpp"
#include "gaussnorm/symbols.hpp"

namespace gaussnorm {

/// "re,im" or a bare real. Throws kInvalidArgument.
Complex parse_complex(std::string_view text);

/// {"n": 1, "hessian_re": [[...]], "hessian_im": [[...]]}; hessian_im may be
/// omitted. Throws kInvalidArgument on malformed input.
QuadraticForm parse_quadratic_form(const std::string& json_text);

/// {"re": [[...]], "im": [[...]]}; im may be omitted.
ComplexMatrix parse_matrix(const std::string& json_text);

std::string read_text_file(const std::string& path);

/// {"norm", "bounded", "compact", "A", "phi", "delta", "classification"},
/// with null where a field is undefined.
std::string davies_result_json(const DaviesResult& r);

/// The same schema for an unbounded point.
std::string unbounded_result_json();

}  // namespace gaussnorm
