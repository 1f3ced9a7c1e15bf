#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace fpgarepair {

struct TileRepairResult;

/// Matrix plus the tile side carried in the file header.
struct ParsedMatrix {
  FaultMatrix matrix;
  TileConfig tile;
};

enum class InputFormat { Auto, Grid, FaultList };

/// Parses the "p q n" header + grid / fault-list body. Auto distinguishes the
/// two by the presence of whitespace in data lines (grid rows never have any).
ParsedMatrix parse_fault_matrix(const std::string& text, InputFormat format = InputFormat::Auto);

/// Canonical grid serialization; parse_fault_matrix is its left inverse.
std::string serialize_grid(const FaultMatrix& m, TileConfig tile);

/// All faulty coordinates, row-major ascending.
std::vector<FaultCoord> fault_coords(const FaultMatrix& m);

/// Exactly k distinct faulty cells drawn without replacement from a generator
/// seeded with `seed`. Same seed, same matrix, on every platform.
FaultMatrix inject_faults(int rows, int cols, int k, std::uint64_t seed);

/// Zero-pads to the next multiple of n in both dimensions.
FaultMatrix pad_to_tile_multiple(const FaultMatrix& m, int n);

/// '.'/'X' grid with tile-boundary rules every n blocks (drawn when n >= 2).
/// An overlay marks blocks covered by spare tiles: 'o' healthy, '#' faulty.
std::string render_ascii(const FaultMatrix& m, TileConfig tile,
                         const TileRepairResult* overlay = nullptr);

}  // namespace fpgarepair
