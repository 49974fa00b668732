#ifndef ARBHH_FREE_GROUP_HPP
#define ARBHH_FREE_GROUP_HPP

#include <string>
#include <vector>

#include "arbhh/hh_table.hpp"

namespace arbhh::hochschild {

struct FreeGroupPresentation {
    int rank = 0;
    std::vector<std::string> labels; // generator names, size == rank

    static FreeGroupPresentation make(int rank, std::vector<std::string> labels = {});
};

struct Letter {
    int gen = 0;
    bool inv = false;
    bool operator==(const Letter& o) const { return gen == o.gen && inv == o.inv; }
    bool operator<(const Letter& o) const { return gen != o.gen ? gen < o.gen : inv < o.inv; }
};
using Word = std::vector<Letter>;

Word reduce_word(Word w);
Word cyclically_reduce(Word w);
/// Lexicographically minimal rotation of the cyclically reduced word.
Word canonical_cyclic_word(Word w);
std::string render_word(const Word& w, const FreeGroupPresentation& g);

/// Canonical representatives of the nontrivial conjugacy classes of cyclic
/// length <= bound, in (length, lex) order.
std::vector<Word> enumerate_conjugacy_classes(const FreeGroupPresentation& g, int max_cyclic_length);

/// HH of k[F_n] by the conjugacy-class decomposition. Every sector is
/// computed by reducing the class slice of the two-term Fox complex
/// [ sum_i k[F] e_i -> k[F] ], u e_i |-> x_i u - u x_i, truncated by word
/// length with internal widening until the ranks stabilize.
HHTable hh_free_group(const FreeGroupPresentation& g, int max_cyclic_length,
                      const linalg::FieldSpec& field);

/// Independent oracle: HH of k[x, x^-1] per weight slice of the two-term
/// complex, |w| <= bound.
HHTable hh_laurent(int max_abs_weight, const linalg::FieldSpec& field);

} // namespace arbhh::hochschild

#endif
