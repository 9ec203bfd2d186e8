#include <ap_int.h>

// Compare a sample against four programmable thresholds.
void top_module(ap_uint<12> sample, const ap_uint<12> thresholds[4],
                ap_uint<4>& flags) {
  ap_uint<4> result = 0;
  for (int i = 0; i < 4; i++) {
#pragma HLS UNROLL
    if (sample >= thresholds[i]) {
      result = result | (1 << i);
    }
  }
  flags = result;
}
