int g0, g1, g2, g3, g4, g5;
int arr[8] = {1, 0, -6, -3, 5, -4, 2, -8};
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
  g0 = -4;
  g1 = -5;
  g2 = -5;
  g3 = -3;
  g4 = -5;
  g5 = -2;
  i0 = 0;
  while (i0 < 4) {
    g2 = g3 % 7;
    i0++;
  }
  switch (g2 % 3) {
  case 0: g0 = arr[2] < arr[7]; break;
  case 1: g1 = -2 ^ g3;
  default: arr[2] = g4 ^ arr[2];
  }
  arr[7] = arr[0] ^ g5;
  i0 = 0;
  while (i0 < 4) {
    g4 = 0 & 9;
    i0++;
  }
  i0 = 0;
  while (i0 < 3) {
    g2 = i0 == i0;
    if (g1 > 40) break;
    i0++;
  }
  if (g5 != g0) g3 = arr[7] + g2;
  else bump(g4);
  switch (g5 % 3) {
  case 0: g5 = arr[1]; break;
  case 1: g3++;
  default: g4 = g1 == g2;
  }
  g3 = g5 < g5;
  for (i0 = 0; i0 < 2; i0++) g5 = g5 % 7;
  for (i0 = 0; i0 < 4; i0++) g2 = helper(g2, i0);
  i0 = 0;
  while (i0 < 2) {
    g4 = i0 + g2;
    i0++;
  }
  i0 = 0;
  while (i0 < 4) {
    g2 = arr[4] != i0;
    i0++;
  }
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g1) continue;
    g1 = -1 % 7;
    g4 = helper(4, g1);
  }
  g0++;
  if (arr[2] < g5) g4++;
  else g0 = 9 * g0;
  for (i0 = 0; i0 < 2; i0++) {
    g3 = i0 & g0;
    g3 = i0 ^ g1;
    g1 = helper(g1, i0);
  }
  switch (g1 % 3) {
  case 0: g2++; break;
  case 1: bump(g2);
  default: g3++;
  }
  bump(helper(g0, arr[2]));
  arr[2] = arr[0] % 7;
  g0 = 5;
  if (g1 % 7) bump(g3 - arr[7]);
  else bump(g1 < 5);
  for (i0 = 0; i0 < 2; i0++) {
    g1 = i0 - i0;
    g3 = g4;
    for (i1 = 0; i1 < 7; i1++) {
      g3 = g3;
      g3 = g2 & -7;
    }
  }
  for (i0 = 0; i0 < 8; i0++) bump(g3 & g4);
  if (g1 < g3) arr[4] = helper(2, 8);
  else g5 = g4 ^ g3;
  bump(-4 % 7);
  g0 = g5 % 7;
  if (g1 + g0) g4 = 2 < g5;
  else arr[1] = g0;
  g1 = g3 != -9;
  i0 = 0;
  while (i0 < 4) {
    g1++;
    i0++;
  }
  if (arr[7]) g4 = g3;
  else g1 = g5;
  arr[4] = arr[6] + g2;
  switch (g4 % 3) {
  case 0: g5 = 3 ^ 7; break;
  case 1: g4 = g5;
  default: g1 = arr[5] & arr[5];
  }
  g1 = -7;
  i0 = 0;
  while (i0 < 3) {
    arr[i0] = i0 & 8;
    i0++;
  }
  for (i0 = 0; i0 < 1; i0++) bump(g0 % 7);
  if (-6 % 7) g5++;
  else g2 = helper(g5, g5);
  if (g5 + g4) g0 = g0 * g4;
  else g1 = g3 ^ arr[0];
  switch (g5 % 3) {
  case 0: g4 = g2; break;
  case 1: g4 = g1 == g0;
  default: g0 = g1 % 7;
  }
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g4) break;
    g5 = 3 + g4;
  }
  if (helper(-5, g5)) arr[2] = arr[0] != g1;
  else arr[5] = arr[4] * g2;
  for (i0 = 0; i0 < 1; i0++) {
    bump(g4 | g3);
    g5 = g2 % 7;
    g4 = g1 - 3;
  }
  if (helper(arr[2], g0)) g2 = arr[6];
  else g2 = helper(-1, g0);
  if (helper(g4, -4)) g5 = g4 < g0;
  else arr[0] = arr[3] != g5;
  bump(g2 * g4);
  if (2 != arr[6]) g4 = g0 % 7;
  else g5 = g5 * g4;
  for (i0 = 0; i0 < 4; i0++) g0 = -5;
  bump(g3 < arr[2]);
  g1 = helper(0, g3);
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g1) break;
    g3 = g5 % 7;
  }
  for (i0 = 0; i0 < 7; i0++) g4++;
  arr[6] = g4 % 7;
  for (i0 = 0; i0 < 4; i0++) g0 = g2;
  switch (g4 % 3) {
  case 0: g5 = -6 >= g2; break;
  case 1: g0 = helper(g2, g1);
  default: g2++;
  }
  if (g1 % 7) g5 = arr[2] + g3;
  else g4 = arr[3] % 7;
  arr[3] = g4 ^ g3;
  if (helper(9, arr[0])) bump(g5 | g2);
  else g0 = g4;
  i0 = 0;
  while (i0 < 3) {
    g5 = g0 | 1;
    if (g3 > 40) break;
    i0++;
  }
  switch (g0 % 3) {
  case 0: arr[6] = g4 != g2; break;
  case 1: g2 = g3;
  default: arr[2] = -5;
  }
  for (i0 = 0; i0 < 8; i0++) {
    arr[i0] = helper(g2, arr[1]);
    if (8 ^ g2) arr[0] = helper(arr[5], g4);
    else g3 = g1 % 7;
    g1 = helper(i0, g2);
  }
  switch (g3 % 3) {
  case 0: g4 = g1; break;
  case 1: g1 = g1 % 7;
  default: g0 = g0;
  }
  arr[7] = arr[0] * g0;
  for (i0 = 0; i0 < 1; i0++) {
    bump(g3);
    arr[i0] = g1 == arr[4];
  }
  switch (g5 % 3) {
  case 0: arr[0] = g3; break;
  case 1: g0++;
  default: g0 = g1 - arr[3];
  }
  switch (g2 % 3) {
  case 0: g5++; break;
  case 1: arr[5] = -2 & g1;
  default: g5 = -7 & 5;
  }
  if (g0 % 7) arr[2] = arr[6] % 7;
  else g1 = arr[1] ^ g3;
  switch (g0 % 3) {
  case 0: g2++; break;
  case 1: bump(helper(arr[4], g0));
  default: g2 = g1 ^ g5;
  }
  if (g4) g1 = g4 != arr[0];
  else bump(helper(arr[4], 0));
  if (g0 - -3) arr[1] = arr[3];
  else g5 = helper(4, g3);
  g1 = g5;
  g4 = arr[1] & g4;
  if (3) g1++;
  else g0 = g1 ^ g2;
  g4 = helper(-6, arr[0]);
  switch (g2 % 3) {
  case 0: bump(arr[1] - -9); break;
  case 1: arr[3] = g2;
  default: g0 = arr[7];
  }
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g2) continue;
    g3 = g1 | arr[7];
    bump(i0 == g2);
  }
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g5) continue;
    g2 = helper(i0, i0);
    g4++;
  }
  g0 = g4 * 9;
  if (7 < g1) arr[4] = g5 & g0;
  else g4 = 5;
  for (i0 = 0; i0 < 7; i0++) g4++;
  for (i0 = 0; i0 < 6; i0++) g0 = helper(-4, -3);
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g2) break;
    g4 = helper(arr[5], g4);
  }
  arr[6] = arr[6];
  g3 = g5 | g5;
  for (i0 = 0; i0 < 5; i0++) g1 = g0 ^ g0;
  arr[0] = arr[6] * g4;
  g0++;
  i0 = 0;
  while (i0 < 3) {
    g0++;
    i0++;
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g1) continue;
    g3 = helper(g4, g5);
    g3 = helper(g3, i0);
  }
  arr[5] = helper(arr[3], 6);
  switch (g5 % 3) {
  case 0: g1 = arr[6] & g0; break;
  case 1: g2 = g4;
  default: g4++;
  }
  for (i0 = 0; i0 < 4; i0++) g5 = i0;
  switch (g5 % 3) {
  case 0: arr[6] = arr[3] >= g0; break;
  case 1: g5 = g3 + g4;
  default: bump(g0 == g3);
  }
  if (g2 % 7) arr[6] = helper(g0, g0);
  else g0++;
  i0 = 0;
  while (i0 < 1) {
    g4 = -4 % 7;
    i0++;
  }
  for (i0 = 0; i0 < 6; i0++) bump(g1);
  for (i0 = 0; i0 < 6; i0++) {
    switch (g1 % 3) {
    case 0: g1++; break;
    case 1: arr[2] = helper(g0, arr[1]);
    default: g2 = arr[4] % 7;
    }
    g0 = i0 >= arr[3];
  }
  for (i0 = 0; i0 < 2; i0++) g3 = g5 % 7;
  bump(arr[2] < -3);
  i0 = 0;
  while (i0 < 4) {
    g0 = g0 - g0;
    i0++;
  }
  i0 = 0;
  while (i0 < 4) {
    bump(0 * g1);
    i0++;
  }
  if (8 % 7) g4 = helper(-3, g0);
  else g3 = helper(g1, arr[7]);
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g2) continue;
    arr[i0] = 8 | -4;
    g4 = -7 - -4;
  }
  g2 = helper(arr[5], arr[4]);
  for (i0 = 0; i0 < 5; i0++) {
    g1 = 9 % 7;
    g4 = arr[1] == arr[3];
  }
  g4 = g5;
  switch (g5 % 3) {
  case 0: g1++; break;
  case 1: arr[5] = g2 % 7;
  default: g1++;
  }
  i0 = 0;
  while (i0 < 3) {
    g1 = i0 < i0;
    i0++;
  }
  switch (g4 % 3) {
  case 0: bump(g5 * 5); break;
  case 1: bump(g3 != g3);
  default: g0++;
  }
  switch (g4 % 3) {
  case 0: g5 = helper(g4, g4); break;
  case 1: g2 = g2 | g3;
  default: bump(arr[5] % 7);
  }
  g2 = g1 & g3;
  if (g0 - g3) g4 = arr[4];
  else arr[7] = helper(arr[5], arr[3]);
  switch (g4 % 3) {
  case 0: g1++; break;
  case 1: g4 = g4 % 7;
  default: g2 = -2;
  }
  switch (g4 % 3) {
  case 0: g0 = helper(g5, g3); break;
  case 1: g2++;
  default: arr[7] = arr[0] ^ g0;
  }
  if (-9 * g5) g5 = g2 >= -9;
  else bump(arr[4] % 7);
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g3) continue;
    g2++;
    arr[i0] = helper(arr[3], arr[1]);
  }
  switch (g1 % 3) {
  case 0: g2 = g1 & -1; break;
  case 1: g1 = g1;
  default: g5 = g4 + arr[0];
  }
  switch (g1 % 3) {
  case 0: g0++; break;
  case 1: bump(g0 % 7);
  default: g0 = g0 != g1;
  }
  for (i0 = 0; i0 < 1; i0++) {
    if (g0) g3++;
    else bump(g5 % 7);
    i1 = 0;
    while (i1 < 2) {
      g4 = arr[3] >= arr[4];
      i1++;
    }
  }
  g3++;
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g4) continue;
    g4++;
  }
  for (i0 = 0; i0 < 4; i0++) {
    g1 = g0 % 7;
    i1 = 0;
    while (i1 < 3) {
      g4 = i1 % 7;
      i1++;
    }
    g5 = g3;
  }
  if (-3 - g5) g2 = arr[4] - g1;
  else g0 = g4 % 7;
  for (i0 = 0; i0 < 3; i0++) g1 = g0;
  g4 = 1;
  if (g1 & g0) g1++;
  else g5++;
  g3++;
  for (i0 = 0; i0 < 5; i0++) {
    g0 = g2 * i0;
    g5 = 4 % 7;
    g3 = i0 >= g4;
  }
  g5 = helper(g4, g3);
  if (g3 * g0) arr[2] = arr[2] * g4;
  else g3++;
  g3 = g3 * g4;
  i0 = 0;
  while (i0 < 3) {
    for (i1 = 0; i1 < 2; i1++) {
      arr[i1] = helper(-8, i1);
      g2 = 9 % 7;
    }
    i0++;
  }
  g4 = -9 % 7;
  switch (g1 % 3) {
  case 0: g4++; break;
  case 1: arr[6] = g3 >= g0;
  default: g0 = g5 != g0;
  }
  g4 = arr[3] >= g3;
  switch (g2 % 3) {
  case 0: g4 = g3 * arr[1]; break;
  case 1: arr[2] = g1;
  default: g4 = g2 % 7;
  }
  g1 = 7 ^ arr[4];
  i0 = 0;
  while (i0 < 1) {
    g5 = g0 >= g1;
    i0++;
  }
  g2++;
  switch (g1 % 3) {
  case 0: g1 = g1 ^ arr[2]; break;
  case 1: bump(g0 | g0);
  default: bump(g1 < g3);
  }
  g2 = helper(arr[5], g2);
  if (g5 + arr[4]) g1++;
  else g4++;
  switch (g2 % 3) {
  case 0: bump(g0); break;
  case 1: g5++;
  default: g5++;
  }
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g4) continue;
    bump(arr[6] < g2);
    g1 = helper(g4, 6);
  }
  if (2 - g3) arr[5] = arr[2] % 7;
  else arr[2] = g3 < g5;
  for (i0 = 0; i0 < 4; i0++) {
    g2 = g0 & 3;
    if (g4 != g4) g1 = arr[7] < g3;
    else g0 = g2 & -4;
  }
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g4) continue;
    bump(-9 ^ g3);
  }
  for (i0 = 0; i0 < 6; i0++) {
    g4 = arr[5] == i0;
    g3++;
  }
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g4) break;
    g2 = arr[6] % 7;
  }
  i0 = 0;
  while (i0 < 2) {
    g0 = g0;
    i0++;
  }
  i0 = 0;
  while (i0 < 4) {
    g5 = arr[5] >= g4;
    if (g5 > 40) break;
    i0++;
  }
  g5 = g2 == -9;
  switch (g1 % 3) {
  case 0: bump(g2 | 5); break;
  case 1: g4 = g5 % 7;
  default: g4 = g0;
  }
  if (helper(g3, g5)) g2 = arr[3] & -2;
  else g1 = arr[5] < arr[5];
  switch (g0 % 3) {
  case 0: g2 = g0 >= g1; break;
  case 1: g0 = arr[5] == arr[7];
  default: bump(g0);
  }
  for (i0 = 0; i0 < 7; i0++) g5 = g1 % 7;
  return g0 % 100;
}
