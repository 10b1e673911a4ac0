int i, evens, threes;

int main(void)
{
  evens = 0;
  threes = 0;
  for (i = 0; i < 12; i++) {
    switch (i % 3) {
      case 0: threes++; continue;
      case 1: break;
      default: ;
    }
    if (i % 2 == 0) evens++;
  }
  return 0;
}
