#pragma once

// Space description documents shared by every subcommand:
//
//   # comment
//   field: GF(3)                    Q | Q(i) | H(Q) | GF(p)
//   dim: 2                          optional when the gram gives it
//   gram: identity                  or diag(1,2), or rows on the following lines
//     1 0
//     0 1
//   subspace M: (1,1)               generators, comma separated
//   state psi: vector (3,4)
//   state phi: atom (1,0)
//   state mix: mixture 1/2 psi, 1/2 phi

#include "orthoform/hermitian_space.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orthoform::cli {

FieldDescriptor parse_field(std::string_view text);

struct StateSpec {
    enum class Kind { vector, atom, mixture };
    std::string name;
    Kind kind = Kind::vector;
    Vector vector;
    std::vector<std::pair<mpq_class, std::string>> parts;
    std::size_t line = 0;
};

struct Document {
    FieldDescriptor field;
    HermitianSpace space;
    std::vector<std::pair<std::string, Subspace>> subspaces;
    std::vector<StateSpec> states;

    const Subspace& subspace(const std::string& name) const;
    bool has_subspace(const std::string& name) const;
};

Document parse_document(std::string_view text);
Document load_document(const std::string& path);

} // namespace orthoform::cli
