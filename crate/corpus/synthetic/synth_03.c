int g0, g1, g2, g3, g4, g5;
int arr[8] = {-7, 3, -8, 8, -3, 6, -8, 2};
int i0, i1;

int helper(int a, int b)
{
  return a * 2 - b;
}

void bump(int k)
{
  g0 = g0 + k % 5;
}

int main(void)
{
  g0 = -2;
  g1 = -2;
  g2 = -3;
  g3 = 2;
  g4 = -3;
  g5 = 1;
  if (g1 % 7) g1 = g5 < 7;
  else g0 = helper(arr[6], g2);
  if (1 % 7) g4 = g0;
  else bump(g2 % 7);
  i0 = 0;
  while (i0 < 4) {
    g3 = helper(arr[7], arr[0]);
    i0++;
  }
  for (i0 = 0; i0 < 6; i0++) g2++;
  i0 = 0;
  while (i0 < 3) {
    g5 = g1;
    i0++;
  }
  switch (g2 % 3) {
  case 0: g1 = g0; break;
  case 1: arr[4] = g1 + g1;
  default: bump(4);
  }
  for (i0 = 0; i0 < 7; i0++) {
    g2++;
    g5 = g1 == arr[1];
  }
  for (i0 = 0; i0 < 7; i0++) {
    for (i1 = 0; i1 < 5; i1++) g1++;
    arr[3] = 3 < g3;
  }
  for (i0 = 0; i0 < 3; i0++) arr[i0] = g5 >= arr[6];
  i0 = 0;
  while (i0 < 2) {
    arr[4] = g0 - arr[6];
    if (g0 > 40) break;
    i0++;
  }
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g1) continue;
    g1 = 4 < 5;
    g4++;
  }
  arr[2] = arr[1] % 7;
  if (arr[1] % 7) arr[6] = -3 >= g2;
  else g1++;
  if (helper(g2, g1)) g2 = 2;
  else bump(g2 >= g3);
  if (-4 < -8) g3 = arr[3] & -7;
  else g0 = arr[2] + g4;
  bump(g3 >= g3);
  g3 = g4 & g3;
  g1++;
  for (i0 = 0; i0 < 2; i0++) {
    g0 = arr[3] == g1;
    if (g2 + arr[1]) g5 = g0 | g4;
    else bump(g1 ^ g2);
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g5) break;
    g4 = g3 == g3;
  }
  g3 = arr[7];
  g1++;
  switch (g3 % 3) {
  case 0: g4 = g2 % 7; break;
  case 1: g4 = 5 % 7;
  default: g3++;
  }
  i0 = 0;
  while (i0 < 3) {
    g1 = helper(arr[0], i0);
    i0++;
  }
  i0 = 0;
  while (i0 < 3) {
    g1 = -1 < -8;
    i0++;
  }
  switch (g3 % 3) {
  case 0: bump(g5 - arr[2]); break;
  case 1: g4++;
  default: bump(arr[6]);
  }
  bump(-8 & g2);
  i0 = 0;
  while (i0 < 3) {
    arr[i0] = helper(arr[2], g2);
    i0++;
  }
  if (g0) g1++;
  else bump(3);
  if (helper(arr[7], arr[7])) g3++;
  else arr[1] = arr[6] | g4;
  switch (g1 % 3) {
  case 0: g5 = g3 | g3; break;
  case 1: g5 = helper(g4, g4);
  default: g1 = 1 % 7;
  }
  if (helper(g0, g2)) g3 = g4 % 7;
  else bump(g3 % 7);
  for (i0 = 0; i0 < 6; i0++) {
    g3 = -3;
    g3++;
    g3 = 0 - arr[7];
  }
  switch (g0 % 3) {
  case 0: bump(-4 % 7); break;
  case 1: bump(g2 != g4);
  default: bump(g1 == g3);
  }
  if (g0 % 7) g2 = g0;
  else arr[1] = g0 == -4;
  i0 = 0;
  while (i0 < 3) {
    g5 = helper(-5, g4);
    i0++;
  }
  if (-7 % 7) arr[5] = g3;
  else g0 = arr[7] != g2;
  i0 = 0;
  while (i0 < 1) {
    if (helper(arr[3], g3)) arr[2] = g0 < arr[7];
    else g4++;
    if (g1 > 40) break;
    i0++;
  }
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g4) continue;
    g3 = g4 % 7;
    bump(helper(g5, arr[4]));
  }
  for (i0 = 0; i0 < 4; i0++) {
    g1 = arr[0] >= -8;
    bump(g2 & g5);
  }
  g4 = 2 % 7;
  if (g3 == g4) arr[6] = g4 < arr[7];
  else g5 = g5 | g1;
  for (i0 = 0; i0 < 2; i0++) {
    g1 = g3;
    arr[i0] = arr[6] * g3;
  }
  for (i0 = 0; i0 < 8; i0++) {
    g3 = arr[6];
    arr[i0] = arr[4] + 0;
  }
  if (helper(arr[2], 4)) bump(-7);
  else g3 = g2;
  switch (g4 % 3) {
  case 0: g2++; break;
  case 1: g3 = g0 == g3;
  default: g0 = -5 - g2;
  }
  if (arr[2] % 7) g0 = g4 & g0;
  else bump(g1 < g0);
  arr[0] = g3;
  arr[3] = g3;
  for (i0 = 0; i0 < 1; i0++) {
    g5 = helper(i0, arr[7]);
    g5++;
  }
  for (i0 = 0; i0 < 7; i0++) {
    arr[i0] = 0 - i0;
    g2 = g4 & g2;
    bump(g3 ^ i0);
  }
  if (arr[3]) g4 = g4 % 7;
  else g3 = g2 | g1;
  if (g4 % 7) g0 = g4 * g2;
  else g5 = g3;
  g3 = g2 + g3;
  if (helper(g4, g1)) g3 = g3 % 7;
  else g4++;
  g5 = arr[5] + g5;
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g2) continue;
    g0++;
  }
  if (arr[0] == g0) arr[6] = g3 + 6;
  else g0 = arr[2] % 7;
  if (arr[1] ^ g4) g2 = 2 * g0;
  else g1 = helper(g5, g4);
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g1) break;
    bump(g0 & -3);
  }
  if (arr[7]) arr[5] = helper(9, -2);
  else g1 = g0 ^ g4;
  g2 = helper(g5, g5);
  g3 = helper(arr[1], g4);
  if (1 != g1) g4 = 3 | g2;
  else bump(g3 < arr[5]);
  switch (g4 % 3) {
  case 0: g4 = g5 ^ g1; break;
  case 1: g3 = helper(-9, g5);
  default: g2 = g4 % 7;
  }
  arr[2] = g0;
  switch (g1 % 3) {
  case 0: g2++; break;
  case 1: g1++;
  default: bump(g4);
  }
  switch (g3 % 3) {
  case 0: g1 = arr[5] != g5; break;
  case 1: g4 = arr[2] >= g1;
  default: g1++;
  }
  i0 = 0;
  while (i0 < 1) {
    g4++;
    if (g4 > 40) break;
    i0++;
  }
  arr[7] = g4;
  g0 = 3 >= arr[3];
  switch (g4 % 3) {
  case 0: arr[0] = g0 == g3; break;
  case 1: g2 = helper(g4, 5);
  default: g4++;
  }
  bump(helper(g0, g5));
  if (g2 == g1) g4 = arr[4] + g1;
  else g4++;
  switch (g5 % 3) {
  case 0: g0++; break;
  case 1: arr[3] = g3 < g3;
  default: g0 = 2 < 4;
  }
  i0 = 0;
  while (i0 < 3) {
    g4 = g3 | g3;
    i0++;
  }
  for (i0 = 0; i0 < 4; i0++) arr[i0] = arr[7];
  switch (g4 % 3) {
  case 0: g4 = helper(6, g1); break;
  case 1: g5++;
  default: g0 = g0 & arr[0];
  }
  switch (g1 % 3) {
  case 0: g4++; break;
  case 1: arr[5] = -9 != g3;
  default: g1 = g1 & 0;
  }
  for (i0 = 0; i0 < 6; i0++) g3 = i0 ^ i0;
  g2++;
  switch (g1 % 3) {
  case 0: g2 = arr[6] * g3; break;
  case 1: bump(helper(g1, 3));
  default: g4++;
  }
  switch (g0 % 3) {
  case 0: g3 = g3 % 7; break;
  case 1: arr[2] = g4 | g4;
  default: g4 = g4 ^ arr[6];
  }
  for (i0 = 0; i0 < 1; i0++) {
    g1 = 6 % 7;
    g1 = arr[2] % 7;
    for (i1 = 0; i1 < 8; i1++) {
      bump(helper(0, g3));
      g3++;
    }
  }
  if (g2 < arr[7]) arr[4] = g1 ^ g3;
  else g5 = helper(5, g0);
  bump(g2 + 6);
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g1) continue;
    arr[i0] = arr[4] % 7;
  }
  switch (g3 % 3) {
  case 0: arr[1] = arr[4] & g0; break;
  case 1: arr[0] = g4 >= g0;
  default: g5 = g2 * g2;
  }
  g1 = helper(g4, g1);
  for (i0 = 0; i0 < 5; i0++) {
    for (i1 = 0; i1 < 3; i1++) g3 = 6;
    g1++;
    g3 = 1 < 1;
  }
  if (helper(g1, g1)) g4++;
  else g1++;
  g3 = g5 | g4;
  g1 = g2;
  if (helper(-2, g0)) g3 = g5 + g0;
  else g3 = helper(arr[4], g0);
  i0 = 0;
  while (i0 < 4) {
    if (g4 == g5) g4++;
    else bump(arr[6] ^ arr[7]);
    i0++;
  }
  i0 = 0;
  while (i0 < 4) {
    g5++;
    i0++;
  }
  bump(helper(arr[3], 3));
  if (helper(0, -1)) g3++;
  else arr[0] = 4;
  bump(arr[1]);
  switch (g2 % 3) {
  case 0: g2 = helper(g5, -3); break;
  case 1: bump(g2 % 7);
  default: bump(g4 % 7);
  }
  for (i0 = 0; i0 < 3; i0++) g4 = g1 == g2;
  switch (g4 % 3) {
  case 0: g4++; break;
  case 1: g2 = g0 >= arr[4];
  default: g5 = g1 | g4;
  }
  g4++;
  g0 = -2 | g0;
  for (i0 = 0; i0 < 3; i0++) {
    g4 = g5 + 2;
    g0 = g2 ^ g5;
  }
  g3 = arr[2] % 7;
  arr[1] = g5 < 4;
  if (arr[1] == g1) g4 = g1 % 7;
  else arr[0] = 2;
  switch (g4 % 3) {
  case 0: g0 = g3 - g1; break;
  case 1: bump(arr[2]);
  default: g3 = -5 & g2;
  }
  if (helper(arr[0], g2)) g3++;
  else g4 = g5 & arr[7];
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g0) break;
    g0 = helper(arr[0], g1);
  }
  switch (g0 % 3) {
  case 0: g1 = -8 + g1; break;
  case 1: g3 = g1 < g2;
  default: g4 = 8 % 7;
  }
  i0 = 0;
  while (i0 < 3) {
    bump(g0 & i0);
    i0++;
  }
  for (i0 = 0; i0 < 2; i0++) {
    if (helper(g4, g5)) g4 = g4 + arr[6];
    else arr[3] = g3 | arr[1];
    for (i1 = 0; i1 < 5; i1++) {
      if (arr[i1] > g1) break;
      g2 = helper(g2, g4);
      g2 = arr[6] % 7;
    }
    g3 = g3 < 8;
  }
  i0 = 0;
  while (i0 < 4) {
    g1 = arr[0] | g0;
    i0++;
  }
  arr[6] = helper(g5, g2);
  i0 = 0;
  while (i0 < 1) {
    g1 = arr[0] ^ 6;
    if (g5 > 40) break;
    i0++;
  }
  if (helper(-1, g4)) g5 = arr[4] * g3;
  else g1++;
  for (i0 = 0; i0 < 6; i0++) g5 = arr[1] ^ 4;
  switch (g4 % 3) {
  case 0: bump(arr[3] | g5); break;
  case 1: g4 = -9 * -7;
  default: g4++;
  }
  if (g1 != g1) g5++;
  else g4 = g0 == g5;
  switch (g3 % 3) {
  case 0: g4 = g5 % 7; break;
  case 1: bump(helper(g3, arr[7]));
  default: g1 = g1 < arr[3];
  }
  arr[3] = g1 - g0;
  for (i0 = 0; i0 < 6; i0++) g1 = g2;
  switch (g4 % 3) {
  case 0: bump(helper(arr[1], g1)); break;
  case 1: g1 = g2 | g1;
  default: bump(g2 + arr[2]);
  }
  if (g3 % 7) g2 = helper(g4, -2);
  else g0 = helper(g2, arr[6]);
  for (i0 = 0; i0 < 6; i0++) arr[i0] = g5 == g3;
  for (i0 = 0; i0 < 2; i0++) g4++;
  bump(9);
  if (g2 == g4) g3 = g4 % 7;
  else arr[1] = g0 - arr[4];
  i0 = 0;
  while (i0 < 4) {
    g2 = 9;
    if (g5 > 40) break;
    i0++;
  }
  g4 = g1 & -2;
  switch (g0 % 3) {
  case 0: g0 = helper(6, 8); break;
  case 1: g0 = g4;
  default: g2 = g2 + -3;
  }
  if (arr[1] < arr[2]) arr[3] = arr[3] >= g2;
  else g0++;
  if (-5) arr[5] = g0 * g1;
  else g3 = g1;
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g4) continue;
    g1++;
  }
  for (i0 = 0; i0 < 5; i0++) bump(-4 != g1);
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g4) break;
    bump(g5 - arr[2]);
  }
  for (i0 = 0; i0 < 4; i0++) g0 = 6;
  bump(g4 < -6);
  for (i0 = 0; i0 < 8; i0++) g2++;
  if (g4 % 7) g1++;
  else g3 = arr[2] % 7;
  bump(helper(g5, g0));
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g1) continue;
    arr[i0] = i0 & g1;
    arr[i0] = g0;
  }
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g1) break;
    g5 = helper(arr[0], arr[2]);
    g5 = helper(g0, i0);
  }
  if (7) g2 = g2 < g0;
  else bump(arr[1] - g4);
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g4) continue;
    g4 = -3;
  }
  if (helper(g4, g2)) arr[7] = g0;
  else g0 = g3;
  i0 = 0;
  while (i0 < 2) {
    switch (g4 % 3) {
    case 0: g0 = g2 % 7; break;
    case 1: g3 = arr[6] < g4;
    default: g1 = g4 * arr[3];
    }
    i0++;
  }
  g0++;
  switch (g2 % 3) {
  case 0: g0 = helper(arr[6], 2); break;
  case 1: g1 = g1 | arr[6];
  default: g1++;
  }
  return g0 % 100;
}
