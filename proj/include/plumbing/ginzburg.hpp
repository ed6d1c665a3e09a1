#pragma once

// Cohomology of e_to * Gamma_Q * e_from, the Ginzburg dg algebra, degree by
// degree.  Words in the letters alpha (degree 0), alpha* (-1) and t_i (-2)
// split into blocks by (#alpha, #t); d replaces one t by a length-2 loop,
// so it maps block (a, m) in degree p to block (a+1, m-1) in degree p+1.
// Ranks are computed blockwise by sparse elimination.  Rows are ordered so
// that the leading term of d(w) is usually w with its first t replaced by
// a fixed loop, which keeps fill-in small.

#include "plumbing/dynkin.hpp"
#include "plumbing/linalg.hpp"
#include "plumbing/omega.hpp"

#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace plumbing {

template <typename Scalar>
class GinzburgComplex {
public:
    explicit GinzburgComplex(const DynkinQuiver& q);

    const GinzburgQuiver& quiver() const { return g_; }

    // dim H^degree of e_to Gamma e_from; degree <= 0
    int cohomology_dim(int from, int to, int degree);
    // dim of the chain group in one degree (all blocks)
    long long chain_dim(int from, int to, int degree);

private:
    using Word = std::string; // one byte per letter, encoded by rank
    struct Term {
        unsigned char first, second;
        int sign;
    };

    void words(int from, int to, int a, int s, int m, std::vector<Word>& out) const;
    void dfs(int cur, int to, int a, int s, int m, Word& w, std::vector<Word>& out) const;
    std::vector<Word> block(int from, int to, int degree, int a, int m, bool sorted) const;
    long long block_size(int from, int to, int degree, int a, int m);
    int rank_out(int from, int to, int degree, int a, int m);
    int max_alpha(int degree, int m) const;

    GinzburgQuiver g_;
    int n_;
    std::vector<std::vector<int>> dist_;
    std::vector<int> letter_of_code_; // code byte -> arrow id
    std::vector<unsigned char> code_; // arrow id -> code byte
    std::vector<std::vector<unsigned char>> alpha_out_, star_out_;
    std::vector<unsigned char> loop_code_;
    std::vector<bool> is_star_code_, is_loop_code_;
    std::vector<int> target_of_code_;
    std::vector<std::vector<Term>> dt_; // per vertex
    std::map<std::tuple<int, int, int, int, int>, int> ranks_;
    std::map<std::tuple<int, int, int, int, int>, long long> counts_; // (cur, to, a, s, m)
};

// Convenience wrapper over the prime field (ranks over F_p with p = 2^61-1).
int ginzburg_cohomology_dim(const DynkinQuiver& q, int from, int to, int degree);

extern template class GinzburgComplex<ModP>;
extern template class GinzburgComplex<Rational>;

} // namespace plumbing
