unsigned char yy[4];

void generateMTFValues(void)
{
  yy[0] = 1;
}

int main(void)
{
  generateMTFValues();
  return 0;
}
