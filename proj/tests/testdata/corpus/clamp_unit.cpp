#include <ap_int.h>

// Clamp a signed sample into [-128, 127].
ap_int<8> clamp(ap_int<16> value) {
  if (value > 127) {
    return 127;
  } else if (value < -128) {
    return -128;
  }
  return value;
}

void top_module(ap_int<16> sample, ap_int<8>& clamped) {
  clamped = clamp(sample);
}
