#ifndef COMAX_TESTS_SMALL_GRAPHS_HPP
#define COMAX_TESTS_SMALL_GRAPHS_HPP

#include "comax/simple_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace comax::test
{

/// Upper-triangle edge bits of a graph on at most 8 vertices, in (0,1), (0,2), ..., (n-2,n-1) order.
std::uint32_t edge_code(const SimpleGraph &g);

/// Smallest edge code over all relabellings that respect an equitable vertex partition.
std::uint32_t canonical_code(const SimpleGraph &g);

/**
 * One representative of every isomorphism class of graphs on exactly n
 * vertices (n <= 8), grown vertex by vertex from the classes on n-1.
 */
std::vector<SimpleGraph> graphs_up_to_iso(std::size_t n);

/// All classes on 1..max_n vertices, smallest first.
std::vector<SimpleGraph> all_small_graphs(std::size_t max_n);

/**
 * Krausz test: the edges split into cliques with every vertex in at most
 * two of them. Exhaustive backtracking; meant for small graphs only.
 */
bool krausz_line_graph(const SimpleGraph &g);

} // namespace comax::test

#endif // COMAX_TESTS_SMALL_GRAPHS_HPP
