#pragma once

#include <string>
#include <vector>

// Catalog systems exercised by the exhaustive checks, with root counts
// |Phi| and Coxeter numbers h from the standard classification tables.
struct CatalogEntry {
  std::string name;
  int roots;
  int coxeter;
};

inline const std::vector<CatalogEntry> kCatalog = {
    {"A1", 2, 2},   {"A2", 6, 3},    {"A3", 12, 4},   {"A4", 20, 5},   {"A5", 30, 6},
    {"A6", 42, 7},  {"A7", 56, 8},   {"A8", 72, 9},   {"B2", 8, 4},    {"B3", 18, 6},
    {"B4", 32, 8},  {"B5", 50, 10},  {"C3", 18, 6},   {"C4", 32, 8},   {"D4", 24, 6},
    {"D5", 40, 8},  {"D6", 60, 10},  {"D7", 84, 12},  {"D8", 112, 14}, {"E6", 72, 12},
    {"E7", 126, 18}, {"E8", 240, 30}, {"F4", 48, 12}, {"G2", 12, 6},
};
