#include <ap_int.h>

// Rising-edge detector with one cycle of state.
void top_module(bool level, bool& pulse) {
  static bool previous = false;
  pulse = level && !previous;
  previous = level;
}
