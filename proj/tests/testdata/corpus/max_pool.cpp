#include <ap_int.h>

// 2x2 max pooling over a 4x4 feature map.
void top_module(const ap_uint<8> feature[16], ap_uint<8> pooled[4]) {
  for (int row = 0; row < 2; row++) {
    for (int col = 0; col < 2; col++) {
#pragma HLS PIPELINE
      ap_uint<8> best = 0;
      for (int dy = 0; dy < 2; dy++) {
        for (int dx = 0; dx < 2; dx++) {
          ap_uint<8> candidate = feature[(row * 2 + dy) * 4 + col * 2 + dx];
          if (candidate > best) {
            best = candidate;
          }
        }
      }
      pooled[row * 2 + col] = best;
    }
  }
}
